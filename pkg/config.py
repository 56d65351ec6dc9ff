import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Run configuration
LOG_LEVEL = os.getenv('GAINV_LOG_LEVEL', 'INFO')
DEFAULT_SEED = int(os.getenv('GAINV_SEED', '0'))
MAX_DEGREE = int(os.getenv('GAINV_MAX_DEGREE', '2'))
ORACLE_DEGREE = int(os.getenv('GAINV_ORACLE_DEGREE', '3'))
EXTENSION_DEGREE = int(os.getenv('GAINV_EXTENSION_DEGREE', '2'))

# Budgets
GROEBNER_BUDGET = int(os.getenv('GAINV_GROEBNER_BUDGET', '20000'))
MONOMIAL_CAP = int(os.getenv('GAINV_MONOMIAL_CAP', '400'))
CANDIDATE_CAP = int(os.getenv('GAINV_CANDIDATE_CAP', '2000'))
MEMBERSHIP_BOUND = int(os.getenv('GAINV_MEMBERSHIP_BOUND', '3'))

FIXTURE_DIR = os.getenv(
    'GAINV_FIXTURE_DIR',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')
)

# Analyzer Configuration
ANALYZER_CONFIGS = {
    'pair_analyst': {
        'name': 'Pair Analyst',
        'expertise': 'c(t)-pairs, the fundamental ideal and kernel triviality',
        'monomial_cap': MONOMIAL_CAP,
        'candidate_cap': CANDIDATE_CAP
    },
    'structure_analyst': {
        'name': 'Socle Structure Analyst',
        'expertise': 'Socle series, variance and the zero large pedestal criteria',
        'monomial_cap': MONOMIAL_CAP,
        'candidate_cap': CANDIDATE_CAP
    },
    'normal_form_analyst': {
        'name': 'Normal Form Analyst',
        'expertise': 'b(t)-adic normal form of the last row and the remainder span',
        'monomial_cap': MONOMIAL_CAP,
        'candidate_cap': CANDIDATE_CAP
    }
}
