"""Configuration for searches, enumerations and theorem checks."""
import math

# Seed used when a run does not give one
DEFAULT_SEED = 0

# Slack used when comparing integer degrees against irrational thresholds
THRESHOLD_EPSILON = 1e-9

# Enumeration bounds
ORACLE_MAX_ORDER = 12
PROBLEM9_MAX_ORDER = 24
CASE1_MIN_ORDER = 4
CASE1_MAX_ORDER = 6

# Random instance models
GENERATOR_MODELS = ["uniform", "rainbow", "monochromatic", "proper-complete", "dense"]
DIGRAPH_MODELS = ["threshold-digraph"]
EDGE_PROBABILITIES = [0.3, 0.5, 0.8]

# Dense model draws colors from a palette this many times the order
DENSE_PALETTE_FACTOR = 3

# Hunt defaults
PROBLEM9_ORDER_RANGE = (4, 14)
CONJECTURE10_PART_RANGE = (1, 9)

# Theorem table: order bound, condition kind, conclusion and threshold on n.
# "pairwise" conditions bound min |CN(u) ∪ CN(v)|, "color-degree" bound δ^c.
SQRT5 = math.sqrt(5)
SQRT7 = math.sqrt(7)

THEOREMS = {
    "T1": {
        "min_order": 4,
        "condition": "pairwise",
        "threshold": lambda n: n - 1,
        "conclusion": "c3-or-c4",
        "requires": None,
    },
    "T2": {
        "min_order": 3,
        "condition": "color-degree",
        "threshold": lambda n: (4 * SQRT7 / 7 - 1) * n + 3 - 4 * SQRT7 / 7,
        "conclusion": "c3-or-c4",
        "requires": None,
    },
    "T3": {
        "min_order": 3,
        "condition": "color-degree",
        "threshold": lambda n: (SQRT7 + 1) / 6 * n,
        "conclusion": "c3",
        "requires": None,
    },
    "T4": {
        "min_order": 9,
        "condition": "color-degree",
        "threshold": lambda n: (3 - SQRT5) / 2 * n + 1,
        "conclusion": "c4",
        "requires": "triangle-free",
    },
    "T5": {
        "min_order": 6,
        "condition": "color-degree",
        "threshold": lambda n: (SQRT5 - 1) * n / 4 + 1,
        "conclusion": "c4",
        "requires": "bipartite",
    },
    "T6": {
        "min_order": 60,
        "condition": "pairwise",
        "threshold": lambda n: n - 1,
        "conclusion": "c4",
        "requires": None,
    },
}
