# config/settings.py
import os
from dotenv import load_dotenv

load_dotenv()

# Base directory của project
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# --- Logging ---
LOG_LEVEL = os.getenv("ITERPOW_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = os.getenv("ITERPOW_LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s")

# --- Fields ---
MAX_PRIME = 2 ** 31  # prime fields need p < MAX_PRIME

# --- Ring arithmetic ---
MUL_CACHE_SIZE = int(os.getenv("ITERPOW_MUL_CACHE_SIZE", 65536))  # monomial products kept per ring
DERIVATION_CACHE_SIZE = int(os.getenv("ITERPOW_DERIVATION_CACHE_SIZE", 16384))

# --- Groebner bases ---
GB_CHAIN_CRITERION = os.getenv("ITERPOW_GB_CHAIN_CRITERION", "true").lower() in ("1", "true", "yes")

# --- Power intersections (cli defaults) ---
DEFAULT_DEGREE = int(os.getenv("ITERPOW_DEFAULT_DEGREE", 6))
DEFAULT_MAX_POWER = int(os.getenv("ITERPOW_DEFAULT_MAX_POWER", 10))
DEFAULT_ITERATIONS = int(os.getenv("ITERPOW_DEFAULT_ITERATIONS", 3))

# --- Invariant factorization ---
MAX_DIVISOR_FACTORS = int(os.getenv("ITERPOW_MAX_DIVISOR_FACTORS", 12))  # divisor enumeration is 2^k
BERLEKAMP_SCAN_LIMIT = int(os.getenv("ITERPOW_BERLEKAMP_SCAN_LIMIT", 1000))  # above this p, split randomly
BERLEKAMP_SEED = int(os.getenv("ITERPOW_BERLEKAMP_SEED", 0))

# --- Fixtures ---
SPECS_DIR = os.path.join(BASE_DIR, "specs")
