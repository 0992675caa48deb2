STD = "std"
ALT = "alt"
BFD = "bfd"
MAX = "max"
FIBRATIONS = (STD, ALT, BFD, MAX)

SUITE_LATTICES = "lattices"
SUITE_DIVISORS = "divisors"
SUITE_QUARTIC = "quartic"
SUITE_FIBRATIONS = "fibrations"
SUITE_DUALITY = "duality"
SUITES = (SUITE_LATTICES, SUITE_DIVISORS, SUITE_QUARTIC, SUITE_FIBRATIONS, SUITE_DUALITY)

LOCUS_GENERIC = "generic"
LOCUS_RES_STD = "res_std"
LOCUS_RES_ALT = "res_alt"
LOCUS_RES_BFD = "res_bfd"
LOCUS_A0 = "a0"
LOCUS_J30 = "j30"
LOCUS_J4 = "j4"
LOCUS_J45 = "j45"

PICARD_RANK = 16

LOGGING_FILE = "logging.ini"
LOG_FILE_PATH = "k3_verifier.log"
EXPECTED_TABLES_FILE = "expected_tables.json"
