"""Frozen reference data for the table, reciprocal, and search reports.

Shared between the unit tests and the acceptance gate so both compare
against one copy of the truth.
"""

# sigma(base^(2h)) factorizations over the catalog prime family, keyed
# by base set, then by base name, then by h.  A base absent from its
# set's dict has no rows at all.  Every factor appears to the first
# power; the rows are stored as name -> exponent for order-free
# comparison.

EXPECTED_TABLE_ROWS = {
    "linear": {
        "x": {
            1: {"M1": 1},
            2: {"M4": 1},
            3: {"M2": 1, "M3": 1},
            4: {"M1": 1, "S4": 1},
            6: {"S3": 1},
            7: {"M1": 1, "M4": 1, "M5": 1, "S1": 1},
        },
        "x+1": {
            1: {"M1": 1},
            2: {"M5": 1},
            3: {"M2": 1, "M3": 1},
            4: {"M1": 1, "S5": 1},
            6: {"S6": 1},
            7: {"M1": 1, "M4": 1, "M5": 1, "S1": 1},
        },
    },
    "mersenne": {
        "M1": {
            1: {"S1": 1},
            2: {"S8": 1},
            3: {"M2": 1, "M3": 1, "S2": 1},
            7: {"M4": 1, "M5": 1, "S1": 1, "S7": 1, "S8": 1},
        },
        "M2": {1: {"M1": 1, "M5": 1}},
        "M3": {1: {"M1": 1, "M4": 1}},
    },
    "two-mersenne": {
        "S1": {1: {"M4": 1, "M5": 1}},
        "S2": {1: {"S1": 1, "S7": 1}},
    },
}

EXPECTED_BASE_NAMES = {
    "linear": ("x", "x+1"),
    "mersenne": tuple(f"M{i}" for i in range(1, 14)),
    "two-mersenne": tuple(f"S{j}" for j in range(1, 16)),
}

# reciprocal survey at max_abc = 6

EXPECTED_RECIPROCAL_ENTRY_COUNT = 80
EXPECTED_STAR_MERSENNE_MAP = {"S1": "M5", "S10": "M7", "S14": "M6", "S15": "M8"}
EXPECTED_SELF_RECIPROCAL = {"S3", "S4"}
EXPECTED_STAR_PAIRS = {("S2", "S5"), ("S6", "S9")}

# split identity families at max_exp = 32

EXPECTED_IDENTITY_COUNTS = (6, 15, 6, 129, 10)

# sieve reference counts and final survivors

EXPECTED_STAGE_COUNTS = {"1": 10944, "2": 4484, "3": 44, "final": 6}
COMPUTED_STAGE2_UNIFORM = 3314
COMPUTED_STAGE2_STRICT = 2159
EXPECTED_FINAL_NAMES = {"T2", "T4", "T5", "T7", "T8", "T11"}
