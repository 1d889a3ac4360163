"""
constants - General constants of use to bihilbert operations.
"""

import re

# Upper bound on the number of nonzero entries of a single spanning-set
# matrix before a MaxSizeException is raised and the cell is skipped
MAX_CELL_ENTRIES = 2000000

# Number of offset increments tried by the stabilization search
DEFAULT_FIT_BUDGET = 40

# Bit size of the random primes used for modular rank
PRIME_BITS = 62

# Number of extra diagonal samples on which the high order
# forward differences must vanish
DIAGONAL_WINDOW = 4

# Random region points compared against a fitted polynomial
SPOT_CHECK_POINTS = 25

DEFAULT_SEED = 0

# Largest generator count for which the standard monomials of a
# monomial ideal are counted by inclusion-exclusion over lcm's
INCLUSION_EXCLUSION_LIMIT = 14

KIND_REES = 'rees'
KIND_QUOTIENT = 'quotient'
KINDS = (KIND_REES, KIND_QUOTIENT)

SOURCE_ORACLE = 'oracle'
SOURCE_COLON = 'colon'
SOURCES = (SOURCE_ORACLE, SOURCE_COLON)

METHOD_COUNTING = 'counting'
METHOD_RANK = 'rank'
METHOD_DECOMPOSITION = 'decomposition'

FORMATS = ('json', 'csv', 'text')

# Process exit codes of the command line surface
EXIT_OK = 0
EXIT_UNSTABLE = 1
EXIT_INPUT_ERROR = 2
EXIT_CELLS_SKIPPED = 3

# A single lexical token of a generator string. Anything not matched
# here is reported with its column.
POLY_TOKEN_PATTERN = r"""
    \s*
    (?:
        (?P<number>\d+)                         # integer literal
        |
        (?P<name>[A-Za-z_][A-Za-z0-9_]*)        # variable name
        |
        (?P<op>\*\*|[-+*/^()])                  # operator or bracket
    )
    """
POLY_TOKEN_RE = re.compile(POLY_TOKEN_PATTERN, re.X)

VARIABLE_NAME_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
