"""Tables transcribed by hand from the published article, used as fixed oracles."""

# LME existence, rows N = 0..12, columns d = 1..12: Y exists, x does not, . empty cell
TABLE_I = [
    "YYYYYYYYYYYY",
    "Yxxxxxxxxxxx",
    ".YxYxYxYxYxY",
    "..YxxYYYYYYY",
    "...YxYYYYYYY",
    "....YxxYYYYY",
    ".....YxYYYYY",
    "......YxxYYY",
    ".......YxYYY",
    "........YxxY",
    ".........YxY",
    "..........Yx",
    "...........Y",
]


def table_i_cells():
    """{(d, N): exists} for the 90 filled cells."""
    cells = {}
    for N, row in enumerate(TABLE_I):
        for col, mark in enumerate(row):
            if mark != ".":
                cells[(col + 1, N)] = mark == "Y"
    return cells


# extreme points (i ones, j zeros) of P_{11,5} that are not in F_{11,5}
TABLE_II_RED = frozenset(
    [(4, j) for j in range(6)] + [(3, 1), (3, 3), (3, 5), (2, 4), (2, 5), (1, 5), (0, 4), (0, 5)]
)
