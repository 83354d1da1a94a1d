"""
    Shared constants for automata, samples, solver guards and the command line.
"""

# =============================================
# Alphabet and words
# =============================================

BINARY_ALPHABET = ("a", "b")

# Abbadingo-style sample files encode symbols as integers: 0 -> a, 1 -> b ...
SAMPLE_FILE_SYMBOLS = "abcdefghijklmnopqrstuvwxyz"

POSITIVE = "positive"
NEGATIVE = "negative"

EMPTY_WORD_DISPLAY = "(empty)"

# =============================================
# Exhaustive search guards
# =============================================

BRUTE_FORCE_SAT_MAX_VARIABLES = 24
ORACLE_MAX_STATES = 3
ORACLE_ALPHABET_SIZE = 2

# =============================================
# Reductions
# =============================================

GOLD_STYLE = "gold"
DLH = "dlh"
CONSTRUCTIONS = (GOLD_STYLE, DLH)

# =============================================
# Reproductions of published counterexamples
# =============================================

FERNAU_LEMMA15 = "fernau-lemma15"
DLH_THM621 = "dlh-thm621"
DLH_THREE_STATE = "dlh-3state"
MEALY_GAP = "mealy-gap"
GOLD_FIG1 = "gold-fig1"

# =============================================
# Command line
# =============================================

DEFAULT_SOLVE_BUDGET = 60

EXIT_SAT = 0
EXIT_CONSISTENT = 0
EXIT_VIOLATION = 1
EXIT_FAILURE = 1
EXIT_UNSAT = 20
EXIT_UNKNOWN = 30
