"""Reference catalog of published values the verification harness reproduces.

Everything here is input data for checks, never used by the algorithms
themselves: the two inequivalent complete 6-arcs of PG_2(7) with their
passant pencils, the unique complete 6-arc of PG_2(8), the comparison-table
rows, and the optimized bound values for small planes.
"""

from __future__ import annotations

from fractions import Fraction

# --- appendix-a: complete 6-arcs of PG_2(7) ---------------------------------

APPENDIX_A = {
    "q": 7,
    "passant_count": 24,
    "peak_multiplicity": 5,      # no outside point lies on more than 5 passants
    "union_caps": {4: 19, 5: 23},
    "min_cover_at_least": 6,
    "cases": {
        "K1": {
            "arc": ["(-1,1,1)", "(1,1,1)", "(1,-1,1)", "(-1,-1,1)", "(0,2,1)", "(0,3,1)"],
            "peaks": ["(0,1,0)", "(1,2,6)", "(1,6,5)", "(1,5,1)", "(0,0,1)", "(1,1,2)"],
            "pencils": [
                ["[1,0,4]", "[0,0,1]", "[1,0,3]", "[1,0,2]", "[1,0,5]"],
                ["[1,2,5]", "[1,3,0]", "[0,1,2]", "[1,6,6]", "[1,1,3]"],
                ["[1,0,4]", "[1,5,5]", "[0,1,3]", "[1,6,1]", "[1,3,6]"],
                ["[1,1,1]", "[0,1,2]", "[1,6,4]", "[1,5,2]", "[1,4,0]"],
                ["[1,3,0]", "[1,2,0]", "[0,1,0]", "[1,5,0]", "[1,4,0]"],
                ["[0,1,3]", "[1,0,3]", "[1,1,6]", "[1,2,2]", "[1,4,1]"],
            ],
            # (i, j, common line) with 1-based peak indices
            "pair_intersections": [
                (1, 3, "[1,0,4]"), (1, 6, "[1,0,3]"), (2, 4, "[0,1,2]"),
                (2, 5, "[1,3,0]"), (3, 6, "[0,1,3]"), (4, 5, "[1,4,0]"),
            ],
        },
        "K2": {
            "arc": ["(-1,1,1)", "(1,1,1)", "(1,-1,1)", "(-1,-1,1)", "(0,2,1)", "(0,-3,1)"],
            "peaks": ["(1,3,3)", "(0,1,0)", "(1,2,5)", "(1,5,2)", "(0,0,1)", "(1,4,4)"],
            "pencils": [
                ["[1,1,1]", "[1,6,3]", "[1,2,0]", "[1,0,2]", "[1,3,6]"],
                ["[1,0,4]", "[0,0,1]", "[1,0,3]", "[1,0,2]", "[1,0,5]"],
                ["[1,0,4]", "[1,3,0]", "[1,6,3]", "[1,5,2]", "[1,4,1]"],
                ["[1,2,5]", "[1,0,3]", "[1,1,4]", "[1,4,0]", "[1,3,6]"],
                ["[1,3,0]", "[1,2,0]", "[0,1,0]", "[1,5,0]", "[1,4,0]"],
                ["[1,6,6]", "[1,5,0]", "[1,1,4]", "[1,4,1]", "[1,0,5]"],
            ],
            "pair_intersections": [
                (1, 2, "[1,0,2]"), (1, 3, "[1,6,3]"), (1, 4, "[1,3,6]"),
                (1, 5, "[1,2,0]"), (2, 3, "[1,0,4]"), (2, 4, "[1,0,3]"),
                (2, 6, "[1,0,5]"), (3, 5, "[1,3,0]"), (3, 6, "[1,4,1]"),
                (4, 5, "[1,4,0]"), (4, 6, "[1,1,4]"), (5, 6, "[1,5,0]"),
            ],
        },
    },
}

# --- appendix-b: the complete 6-arc of PG_2(8) -------------------------------

APPENDIX_B = {
    "q": 8,
    "passant_count": 34,
    "peak_multiplicity": 6,
    "union_caps": {4: 23, 5: 28, 6: 33},
    "min_cover_at_least": 7,
    "cases": {
        "K": {
            "arc": ["(1,0,0)", "(0,1,0)", "(0,0,1)", "(1,1,1)", "(ω^3,ω^2,1)", "(ω^2,ω^3,1)"],
            "peaks": ["(1,ω^6,0)", "(1,1,0)", "(1,1,ω^5)", "(1,1,ω^4)",
                      "(1,ω,0)", "(1,0,1)", "(0,1,1)"],
            "pencils": [
                ["[1,ω,ω^4]", "[1,ω,ω^3]", "[1,ω,ω^2]", "[1,ω,ω]", "[1,ω,1]", "[1,ω,ω^6]"],
                ["[1,1,ω]", "[1,1,ω^6]", "[1,1,ω^5]", "[1,1,ω^4]", "[1,1,ω^3]", "[1,1,ω^2]"],
                ["[1,ω^5,ω^3]", "[1,ω^3,ω^4]", "[1,ω,1]", "[1,ω^6,ω^6]", "[1,ω^4,ω]", "[1,ω^2,ω^5]"],
                ["[1,ω^6,1]", "[1,ω^3,ω^5]", "[1,ω,ω]", "[1,ω^4,ω^2]", "[1,ω^5,ω^4]", "[1,ω^2,ω^6]"],
                ["[1,ω^6,1]", "[1,ω^6,ω^3]", "[1,ω^6,ω^2]", "[1,ω^6,ω^5]", "[1,ω^6,ω^6]", "[1,ω^6,ω]"],
                ["[1,ω^6,1]", "[1,ω^2,1]", "[1,ω^5,1]", "[1,ω,1]", "[1,ω^3,1]", "[1,ω^4,1]"],
                ["[1,ω^2,ω^2]", "[1,ω^4,ω^4]", "[1,ω,ω]", "[1,ω^6,ω^6]", "[1,ω^5,ω^5]", "[1,ω^3,ω^3]"],
            ],
            # each entry: ([pairs sharing the same single line], line)
            "triple_intersections": [
                ([(1, 3), (1, 6), (3, 6)], "[1,ω,1]"),
                ([(1, 4), (1, 7), (4, 7)], "[1,ω,ω]"),
                ([(3, 5), (3, 7), (5, 7)], "[1,ω^6,ω^6]"),
                ([(4, 5), (4, 6), (5, 6)], "[1,ω^6,1]"),
            ],
        },
    },
}

# --- comparison tables --------------------------------------------------------
# rows: q -> (general lower bound, partition lower bound, alpha at the optimum)

TABLE1_M2 = {
    3:  ("0.5729",   "0.69586", "0.0809"),
    4:  ("0.5814",   "0.70699", "0.0576"),
    5:  ("0.5864",   "0.7347",  "0.0389"),
    7:  ("0.59218",  "0.7480",  "0.0247"),
    8:  ("0.59397",  "0.7548",  "0.0205"),
    9:  ("0.59536",  "0.7614",  "0.0173"),
    11: ("0.597389", "0.78166", "0.0122"),
    13: ("0.59879",  "0.7914",  "0.0095"),
    16: ("0.6002",   "0.8043",  "0.0069"),
    17: ("0.6006",   "0.8130",  "0.0061"),
    19: ("0.6012",   "0.8197",  "0.0051"),
}

TABLE2_M3 = {
    17: ("0.9710777103", "0.9701091221", "0.0006198906"),
    19: ("0.9740717446", "0.9736668015", "0.0004716926"),
    23: ("0.9785208385", "0.9790232680", "0.0002926917"),
    25: ("0.9802185562", "0.9809821553", "0.0002383002"),
    27: ("0.9816677623", "0.9827113542", "0.0001961485"),
    29: ("0.9829192657", "0.9841874880", "0.0001636689"),
}

# rows where the general bound beats the partition bound (bold column flips)
TABLE2_GENERAL_WINS = (17, 19)

# --- optimized arc-partition bounds for small planes --------------------------
# q -> (M, bound, (alpha, beta, gamma))

ARC_BOUND_OPTIMA = {
    3: (2, "0.7364719055", ("0.5948588940", "0.3216013121", "0.0835397939")),
    4: (3, "0.7381611274", ("0.6566212797", "0.2297814643", "0.1135972558")),
    5: (4, "0.7440388117", ("0.7000841083", "0.1750121987", "0.0416345643")),
    7: (6, "0.7583661147", ("0.7578927975", "0.1142680556", "0.02556782938")),
    8: (7, "0.7654160822", ("0.7782735564", "0.0960589824", "0.0209445768")),
}

# --- expansions of the arc-partition polynomial for small planes --------------
# exponent triple (i, j, k) of alpha^i beta^j gamma^k -> coefficient

POLY_EXPANSIONS = {
    3: {(3, 1, 0): 4, (3, 0, 1): 4, (2, 2, 0): 6, (2, 1, 1): 12, (1, 2, 1): 12},
    4: {(4, 1, 0): 5, (4, 0, 1): 10, (3, 2, 0): 10, (3, 1, 1): 40, (3, 0, 2): 20,
        (2, 2, 1): 60, (2, 1, 2): 60, (1, 2, 2): 60},
    5: {(5, 1, 0): 6, (5, 0, 1): 18, (4, 2, 0): 15, (4, 1, 1): 90, (4, 0, 2): 90,
        (3, 2, 1): 180, (3, 1, 2): 360, (3, 0, 3): 120, (2, 2, 2): 540,
        (2, 1, 3): 360, (1, 2, 3): 360},
    7: {(1, 2, 5): 20160, (2, 2, 4): 50400, (2, 1, 5): 20160, (3, 2, 3): 33600,
        (3, 1, 4): 33600, (3, 0, 5): 6720, (4, 2, 2): 8400, (4, 1, 3): 16800,
        (4, 0, 4): 8400, (5, 2, 1): 840, (5, 1, 2): 3360, (5, 0, 3): 3360,
        (6, 2, 0): 28, (6, 1, 1): 280, (6, 0, 2): 560, (7, 1, 0): 8, (7, 0, 1): 40},
    8: {(1, 2, 6): 181440, (2, 2, 5): 544320, (2, 1, 6): 181440, (3, 2, 4): 453600,
        (3, 1, 5): 362880, (3, 0, 6): 60480, (4, 2, 3): 151200, (4, 1, 4): 226800,
        (4, 0, 5): 90720, (5, 2, 2): 22680, (5, 1, 3): 60480, (5, 0, 4): 45360,
        (6, 2, 1): 1512, (6, 1, 2): 7560, (6, 0, 3): 10080, (7, 2, 0): 36,
        (7, 1, 1): 432, (7, 0, 2): 1080, (8, 1, 0): 9, (8, 0, 1): 54},
}

MQ_VALUES = {3: 2, 4: 3, 5: 4, 7: 6, 8: 7}

# closed-form spot values: exact rationals
CLOSED_FORMS = {
    "general_lower_m2_q3": Fraction(55, 96),
    "chromatic_q3_chi3": Fraction(7, 8),
    "chromatic_q4_chi3": Fraction(15, 16),
    "binary_upper_m3": Fraction(20, 21),
    "t_m2_q3": 5,
    "t_m3_q23": 668,
}
