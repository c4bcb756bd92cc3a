"""Shared constants used across multiple modules.

This module contains only constants that are truly shared across different
domains/modules. Domain-specific constants should be in their respective
modules (e.g., hamflow/constants.py, punctured/constants.py, etc.).
"""

DEFAULT_ENCODING = "utf-8"

PACKAGE_NAME = "qm-continuity"

SEPARATOR_LENGTH = 60
SEPARATOR_CHAR = "="
ALT_SEPARATOR_CHAR = "-"
PASS_MARK = "✓"
FAIL_MARK = "✗"
