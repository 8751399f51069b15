"""Elimination tables for n = 2, 3 and the n = 4 lower-left block, column by column."""

TWO_QUBIT = [
    (2, 1, "*V"), (4, 1, "1V"), (3, 1, "V*"),
    (3, 2, "1V"), (4, 2, "V1"),
    (4, 3, "1V"),
]

THREE_QUBIT = {
    1: [(2, "**V"), (4, "*1V"), (3, "*V*"), (6, "1*V"), (8, "*1V"), (7, "1V*"), (5, "V**")],
    2: [(3, "*1V"), (4, "*V1"), (5, "1*V"), (7, "*1V"), (8, "1V*"), (6, "V*1")],
    3: [(4, "*1V"), (8, "1*V"), (6, "10V"), (5, "1V*"), (7, "V1*")],
    4: [(7, "1*V"), (5, "10V"), (6, "1V*"), (8, "V11")],
    5: [(6, "1*V"), (8, "11V"), (7, "1V*")],
    6: [(7, "11V"), (8, "1V1")],
    7: [(8, "11V")],
}

# Lower half (rows 9..16) of columns 1..8, with the within-column step
# numbers of the first and last lower-half entries.
FOUR_QUBIT_LOWER = {
    1: ((8, 15), [(10, "1**V"), (12, "**1V"), (11, "1*V*"), (14, "*1*V"), (16, "**1V"), (15, "*1V*"), (13, "1V**"), (9, "V***")]),
    2: ((7, 14), [(9, "1**V"), (11, "**1V"), (12, "1*V*"), (13, "*1*V"), (15, "**1V"), (16, "*1V*"), (14, "1V**"), (10, "V**1")]),
    3: ((6, 13), [(12, "1**V"), (10, "1*0V"), (9, "1*V*"), (16, "*1*V"), (14, "1*0V"), (13, "*1V*"), (15, "1V**"), (11, "V*1*")]),
    4: ((5, 12), [(11, "1**V"), (9, "1*0V"), (10, "1*V*"), (15, "*1*V"), (13, "1*0V"), (14, "*1V*"), (16, "1V**"), (12, "V*11")]),
    5: ((4, 11), [(14, "1**V"), (16, "1*1V"), (15, "1*V*"), (10, "10*V"), (12, "1*1V"), (11, "10V*"), (9, "1V**"), (13, "V1**")]),
    6: ((3, 10), [(13, "1**V"), (15, "1*1V"), (16, "1*V*"), (9, "10*V"), (11, "1*1V"), (12, "10V*"), (10, "1V**"), (14, "V1*1")]),
    7: ((2, 9), [(16, "1**V"), (14, "1*0V"), (13, "1*V*"), (12, "10*V"), (10, "1*0V"), (9, "10V*"), (11, "1V**"), (15, "V11*")]),
    8: ((1, 8), [(15, "1**V"), (13, "1*0V"), (14, "1*V*"), (11, "10*V"), (9, "1*0V"), (10, "10V*"), (12, "1V**"), (16, "V111")]),
}
