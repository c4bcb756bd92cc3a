"""Constants specific to Moser equalization, fragmentation and curve extension."""

DEFAULT_GRID = 513
MIN_GRID = 4

TOL_DISC = 1e-6
TOL_PULLBACK = 1e-3
TOL_FRAG = 1e-3
TOL_CURVE = 1e-4
TOL_MASS = 1e-3

# RK4 steps in time for Moser flows and skeleton adjustments.
MOSER_STEPS = 32
SKELETON_STEPS = 64

# Support of the normalized profile that absorbs row masses, as fractions
# of the rectangle width measured from each side.
PRIMITIVE_MARGIN = 0.25

# beta must equal 1 to this tolerance within delta of both edge ends.
BETA_TOL = 1e-9

# Dilation plateau c = C_MARGIN / (2 eps) on [delta, 1 - delta].
FRAGMENT_DELTA = 0.1
FRAGMENT_C_MARGIN = 1.25
FRAGMENT_GRID = 257
FRAGMENT_T_STEPS = 64
FRAGMENT_KAPPA_MIN = 1e-4
FRAGMENT_KAPPA_ITERATIONS = 40
FRAGMENT_KAPPA_TIMES = 64
# theta equals h_t on |q| <= FRAGMENT_PLATEAU * 2 eps.
FRAGMENT_PLATEAU = 0.75
FRAGMENT_QUAD_NODES = 48
FRAGMENT_FD_STEP = 1e-6

# Curve extension: vertical slides are translations on |y| <= CURVE_INNER and
# vanish on |y| >= CURVE_OUTER.
CURVE_INNER = 0.25
CURVE_OUTER = 0.8
CURVE_LIFT = 3.0
CURVE_GRID = 257
CURVE_FLOW_STEPS = 16
# Rectangle half-width as a fraction of the marker spacing.
MARKER_WINDOW = 1.0 / 6.0
MARKER_REFINEMENTS = 4
# A backward run is closed once its ends clear it by FOLD_PAD times its length.
FOLD_PAD = 0.25
# Horizontal pushes fade out over FOLD_REACH times their size.
FOLD_REACH = 2.5

GRID_MAGIC = b"QMCGRID1"

# Reach of the shear bumps used for test densities, as a fraction of the
# rectangle side measured from its middle.
SHEAR_REACH = 0.4
# Smallest observed order of the pullback residual under grid doubling.
REFINEMENT_MIN_ORDER = 1.0
