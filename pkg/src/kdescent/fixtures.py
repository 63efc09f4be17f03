"""
Published reference values used as golden fixtures.

Permutations and codes are written as compact digit strings.
"""

# standardization of the word bbacab over a < b < c
STD_EXAMPLE = ("221312", "341625")

# (permutation, k, kind, code)
CODE_EXAMPLES = [
    ("85736124", 3, "descent", "32212123"),
    ("426135", 3, "descent", "323123"),
    ("426135", 4, "descent", "434133"),
    ("425163", 3, "recoil", "323123"),
    ("2314", 3, "recoil", "3223"),
    ("2341", 3, "recoil", "3223"),
]

# 3-descent pattern of 85736124 read by a sliding window
PATTERN_EXAMPLE = ("85736124", 3, ("312", "231", "312", "231", "312", "123"), "32212123")

# 3-recoil codes of S_3 and S_4, permutations taken in lexicographic order
RECOIL_CODES_K3 = {
    3: "333 332 323 322 331 321".split(),
    4: (
        "3333 3332 3323 3322 3331 3321 3233 3232 3223 3223 3232 3222 "
        "3313 3312 3213 3213 3312 3212 3331 3321 3231 3221 3311 3211"
    ).split(),
}

# the non-singleton 3-recoil classes of S_4
DOUBLETON_CLASSES_S4_K3 = [
    ("1423", "4123"), ("1432", "4132"), ("2143", "2413"),
    ("2314", "2341"), ("3142", "3412"), ("3214", "3241"),
]

# k = 3 Eulerian polynomials as {exponents of (t1, t2, t3): coefficient}
EULERIAN_K3 = {
    1: {(0, 0, 0): 1},
    2: {(0, 1, 0): 1, (0, 0, 1): 1},
    3: {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 2, (0, 2, 0): 1, (0, 0, 2): 1},
    4: {
        (2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 2, (1, 1, 1): 7, (1, 0, 2): 3,
        (0, 3, 0): 1, (0, 2, 1): 5, (0, 1, 2): 3, (0, 0, 3): 1,
    },
}

# k = 3 major-index polynomials in (q1, q2, q3)
MAJOR_K3 = {
    1: {(0, 0, 0): 1},
    2: {(0, 1, 0): 1, (0, 0, 1): 1},
    3: {(2, 1, 0): 1, (2, 0, 1): 1, (0, 2, 1): 1, (0, 3, 0): 1, (0, 1, 2): 1, (0, 0, 3): 1},
}

# F-basis products F_sigma F_1
F_PRODUCTS = {
    ("42531", "1"): ["425316", "425361", "425631", "426531", "462531", "642531"],
    ("21543", "1"): ["215436", "215463", "215643", "216543", "261543", "621543"],
}

# F-basis coproducts, as (left, right) pairs; "" is the unit
F_COPRODUCTS = {
    "42531": [("42531", ""), ("3142", "1"), ("213", "21"), ("21", "321"), ("1", "2431"), ("", "42531")],
    "21543": [("21543", ""), ("2143", "1"), ("213", "21"), ("21", "321"), ("1", "1432"), ("", "21543")],
}

# ribbon product in DSym(3)
RIBBON_PRODUCT_K3 = (("321", "3321"), ["3211221", "3211321", "3212321", "3213321"])

# generator counts by degree 1..13; OEIS A001333 (k=3) and A084519 (k=4)
GENERATOR_SERIES = {
    3: [1, 1, 3, 7, 17, 41, 99, 239, 577, 1393, 3363, 8119, 19601],
    4: [1, 1, 3, 13, 47, 173, 639, 2357, 8695, 32077, 118335, 436549, 1610471],
}
