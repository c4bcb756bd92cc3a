"""Constants specific to free-group words and counting quasi-morphisms."""

# Serialized alphabet: lowercase letters are generators, uppercase their inverses.
ALPHABET = ("a", "A", "b", "B")

# Integer letter codes: +1/-1 for a^{+-1}, +2/-2 for b^{+-1}.
LETTER_CODES = {"a": 1, "A": -1, "b": 2, "B": -2}

IDENTITY_STRING = "e"

DEFAULT_DEFECT_BUDGET = 10_000
DEFAULT_DEFECT_MAX_LEN = 64
