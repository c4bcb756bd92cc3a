"""Constants specific to configuration functionality."""

CONFIG_SUFFIX = ".yaml"

ENV_PREFIX = "QMC_"

# Sections left out of the config hash: they change where and how fast a
# run happens, not what it computes.
UNHASHED_SECTIONS = frozenset({"paths", "logging", "runtime"})

DEFAULT_OUTPUT_DIR = "./results"

# Acceptance bands shared by the estimator experiments.
DEFAULT_RELATIVE_TOLERANCE = 0.1
DEFAULT_ERROR_SIGMAS = 4.0

DEFAULT_PROBE_AREAS = (0.01, 0.03, 0.1)
DEFAULT_PROBE_SAMPLES = 2_000
DEFAULT_AUDIT_TRIALS = 1_000

DEFAULT_CALABI_INDICES = (2, 4, 8, 16)

DEFAULT_MOSER_AMPLITUDES = (0.04, 0.02, 0.01, 0.005)
DEFAULT_MOSER_CASES = 10

DEFAULT_CURVE_EPSILONS = (0.01, 0.02, 0.05)
DEFAULT_CURVES = 10
DEFAULT_CURVE_VERTICES = 256
DEFAULT_CURVE_HARMONICS = 3
