"""Published counts and constants the suite checks against."""

# area -> (column-convex, level 1, level 2, level 3, all)
TABLE = {
    1: (1, 1, 1, 1, 1),
    2: (3, 3, 3, 3, 3),
    3: (11, 11, 11, 11, 11),
    4: (42, 43, 43, 43, 44),
    5: (162, 173, 174, 174, 186),
    6: (626, 705, 718, 719, 814),
    7: (2419, 2889, 2996, 3012, 3652),
    8: (9346, 11867, 12579, 12727, 16689),
    9: (36106, 48795, 52996, 54067, 77359),
    10: (139483, 200723, 223705, 230464, 362671),
    11: (538841, 825845, 945324, 984477, 1716033),
    12: (2081612, 3398081, 3997185, 4211222, 8182213),
}
COLUMNS = ("cc", "cheesy:1", "cheesy:2", "cheesy:3", "all")


def column(name: str, n: int = 12) -> list[int]:
    i = COLUMNS.index(name)
    return [TABLE[k][i] for k in range(1, n + 1)]


CC_GF = ((0, 1, -3, 3, -1), (1, -6, 10, -7, 1))
L1_GF = ((0, 1, -3, 1), (1, -6, 8, -1))
L2_GF = (
    (0, 1, -6, 11, -6, -1, 0, -3, 5, 4, -3, -3),
    (1, -9, 27, -31, 8, 4, -2, 16, -5, -16, -2, 5),
)

# model -> (growth, amplitude), six decimals
ASYMPTOTICS = {
    "CC": ("3.863130", "0.188419"),
    "L1": ("4.114907", "0.144176"),
    "L2": ("4.231836", "0.121042"),
    "L3": ("4.288630", "0.108269"),
}
