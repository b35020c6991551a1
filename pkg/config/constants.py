"""Toolkit constants and configuration values"""

# Search limits
DEFAULT_NODE_BUDGET = 2_000_000  # candidate symbol placements per query
SUBSPACE_MAX_RETRIES = 1000  # rejected rows before random_subspace gives up
SURVEY_MAX_SETS = 200_000  # subsets a single survey may enumerate
SURVEY_DEFAULT_EXAMPLES = 5
SURVEY_CLASS_MAX_POINTS = 6  # survey groups uncertified sets by isometry class up to this m

# Text format
COMMENT_PREFIX = "#"
GENERATOR_COMMENT = "# generator"

# Output
OUTPUT_MODES = ("table", "json")
DEFAULT_OUTPUT_MODE = "table"
JSON_INDENT = 2
ENVVAR_PREFIX = "HAMRANK"

# Exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1  # computation-level negative finding (e.g. dense-check --strict)
EXIT_USAGE = 2  # unreadable input, malformed file, bad flags

# Logging
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"
