"""Constants specific to CLI functionality."""

PROG_NAME = "qmc"

ENUMERATE_START = 1

EXIT_CODE_SUCCESS = 0
EXIT_CODE_ERROR = 1
