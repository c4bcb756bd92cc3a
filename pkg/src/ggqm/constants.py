"""Constants specific to the Monte-Carlo quasi-morphism estimator."""

# Homogenization powers run by the schedule presets.
P_SCHEDULE = (1, 2, 4, 8, 16)
DEFAULT_P = 16

DEFAULT_N_SAMPLES = 10_000
DEFAULT_CHUNK_SIZE = 256
DEFAULT_WORKERS = 1

# Rejections per sample before the sample gives up, and the rejection rates
# that trigger a warning and an error.
MAX_SAMPLE_RETRIES = 100
WARN_REJECTION_RATE = 0.01
MAX_REJECTION_RATE = 0.10

# Standard errors used by the zero tests and the drift monitor.
ZERO_SIGMAS = 3.0
DRIFT_SIGMAS = 3.0

# Scale probe: bumps per area and the magnitude range of their masses,
# relative to the support area.
PROBE_TRIALS = 3
PROBE_MASS_SCALE = 0.1
PROBE_MASS_RANGE = (0.5, 1.0)

# Cocycle audit bump ranges, and the share of trials whose composed word
# must equal the product word.
AUDIT_RADIUS_RANGE = (0.05, 0.3)
AUDIT_MASS_RANGE = (-0.02, 0.02)
AUDIT_MIN_IDENTITY_RATE = 0.95

# Invariance checks: the torus shift conjugating F, the time-s maps compared
# with s times the time-1 map, and the combined standard errors allowed.
SHIFT = (0.25, 0.125)
LINEARITY_SCALES = (1, 2, 3)
INVARIANCE_SIGMAS = 3.0
