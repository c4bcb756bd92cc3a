"""Constants for experiment pipelines."""

UNIT_SQUARE = (0.0, 1.0, 0.0, 1.0)

# Random Moser densities: 1 + sum a_kl sin(k pi x) sin(l pi y), |a_kl| <= DENSITY_COEFFICIENT
DENSITY_MODES = 3
DENSITY_COEFFICIENT = 0.05

# Random curve heights reach CURVE_FILL * epsilon
CURVE_FILL = 0.8

TABLE_SUFFIX = ".csv"
REPORT_FILE = "report.txt"
GRIDS_DIR = "grids"
CONFIG_HASH_COLUMN = "config_hash"
TIMING_COLUMNS = frozenset({"wall_time_s"})
