"""Constants specific to loops in the punctured torus."""

# Basepoint x* of all loops, the centre of the square cell.
BASEPOINT = (0.5, 0.5)

DELTA_PUNCT = 1e-3
H_LOOP = 1e-3
# Segments may be as long as this fraction of their distance to the puncture.
CHORD_RATIO = 0.25

BASE_STEPS = 64
MAX_LOOP_STEPS = 2**20

TANGENT_TOL = 1e-12
CLOSURE_TOL = 1e-9

DUMP_HEADER = "# qmc loop dump v1"
# Hex digits of the vertex hash naming a failure dump.
DUMP_DIGEST_LENGTH = 12

# Angular spacing of the arc that replaces a radial-flow difference path.
SWEEP_ARC_STEP = 0.05
