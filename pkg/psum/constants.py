CONJECTURE_ALSPACH = 'alspach'
CONJECTURE_ADMS = 'adms'
CONJECTURE_ZERO_SUM = 'zero_sum'

CONJECTURES = (
    (CONJECTURE_ALSPACH, 'Alspach: distinct nonzero partial sums, sum(A) != 0'),
    (CONJECTURE_ADMS, 'ADMS: distinct partial sums'),
    (CONJECTURE_ZERO_SUM, 'Zero-sum: distinct partial sums, sum(A) = 0, '
                          'no inverse pair'),
)

FAMILY_ABELIAN = 'abelian'
FAMILY_CYCLIC = 'cyclic'
FAMILY_CAYLEY = 'cayley'

MODE_EXISTENCE = 'existence_only'
MODE_STORE_WITNESSES = 'store_witnesses'

TARGET_CYCLE = 'cycle'
TARGET_PATH = 'hamiltonian_path'
TARGET_FACTOR = 'near_one_factor'

TARGETS = (TARGET_CYCLE, TARGET_PATH, TARGET_FACTOR)

TARGET_ALIASES = {
    'path': TARGET_PATH,
    'factor': TARGET_FACTOR,
}

BUILTIN_GROUPS = ('cyclic', 'sym', 'alt', 'dihedral', 'quaternion', 'dicyclic')

# Associativity is checked on every triple up to this order, on a fixed
# random sample of triples above it.
ASSOCIATIVITY_EXHAUSTIVE_LIMIT = 24
ASSOCIATIVITY_SAMPLE_SIZE = 20000

MAX_CAYLEY_ORDER = 64

# The constructive orderings cover |A| <= 9 for abelian groups and
# |A| <= 5 for arbitrary groups.
CONSTRUCTIVE_ABELIAN_LIMIT = 9
CONSTRUCTIVE_GENERAL_LIMIT = 5

# Below this size signed sums are enumerated directly, above it the two
# halves are met in the middle.
SIGNED_SUM_ENUMERATION_LIMIT = 20

EXIT_ERROR = 1
EXIT_NOT_FOUND = 2

STRATEGY_CONSTRUCTIVE = 'constructive'
STRATEGY_BRUTE_FORCE = 'brute_force'
