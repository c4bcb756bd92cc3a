"""Constants specific to Hamiltonian flows."""

H_FD = 1e-5
TOL_FLOW = 1e-6
TOL_AREA = 1e-4
TOL_QUAD = 1e-3

N_QUAD = 512
N_C0 = 256
N_TIME_QUAD = 8

DEFAULT_STEPS = 64
MAX_STEPS = 2**20

MIDPOINT_MAX_ITER = 50
MIDPOINT_TOL = 1e-13
PROJECTION_ITERATIONS = 2

# Fraction of the bump radius on which the profile is constant.
BUMP_PLATEAU = 0.5
PROFILE_TABLE_SIZE = 4097

SUPPORT_CHECK_SAMPLES = 2000

TORUS_MAX_RADIUS = 0.5
