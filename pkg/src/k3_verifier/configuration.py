# First Party
from k3_verifier.constants import LOG_FILE_PATH
from k3_verifier.environment_wrapper import EnvironmentVariable

DEBUG_MODE = "DEBUG_MODE"
K3_VERIFIER_LOG_FILE = "K3_VERIFIER_LOG_FILE"
K3_PROPERTY_CASES = "K3_PROPERTY_CASES"
K3_RANDOM_SEED = "K3_RANDOM_SEED"
K3_J30_CHAIN_EXACT = "K3_J30_CHAIN_EXACT"

REQUIRED_ENV_VARS = [
    EnvironmentVariable(
        DEBUG_MODE,
        "Show debug log statements, if set to '0' only INFO logs and above will be shown.",
        required=False,
        default="0",
    ),
    EnvironmentVariable(
        K3_VERIFIER_LOG_FILE,
        "The path of the rotating log file.",
        required=False,
        default=LOG_FILE_PATH,
    ),
    EnvironmentVariable(
        K3_PROPERTY_CASES,
        "Number of randomized cases per property family of the exact-algebra suite.",
        required=False,
        default="1000",
        cast=int,
    ),
    EnvironmentVariable(
        K3_RANDOM_SEED,
        "Seed of the random generator used by the property checks.",
        required=False,
        default="20240229",
        cast=int,
    ),
    EnvironmentVariable(
        K3_J30_CHAIN_EXACT,
        "Confirm the J30 chain symbolically after sampling, if set to '0' only the samples are compared.",
        required=False,
        default="1",
        cast=int,
    ),
]
