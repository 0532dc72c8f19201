"""Values printed in the source tables, kept verbatim for comparison."""

from __future__ import annotations

# Bourbaki numbering; the G2 column lists the long simple root first.
PRINTED_G2 = ["11", "10", "00"]
PRINTED_F4 = ["1111", "1101", "1100", "1001", "0101", "0100", "0001", "0000"]
PRINTED_E6 = [
    "111111", "111011", "111010", "110101", "110010", "110001",
    "110000", "101101", "101001", "101000", "100111", "100101",
    "100100", "100011", "100010", "100001", "100000", "011011",
    "011001", "010100", "010001", "010000", "001001", "001000",
    "000101", "000100", "000011", "000010", "000001", "000000",
]
PRINTED_E7 = [
    "1111111", "1110111", "1110101", "1100101", "1100001", "1011010",
    "1010010", "1010000", "1001011", "1001010", "1001001", "1000100",
    "1000011", "1000010", "1000001", "1000000", "0110011", "0100000",
    "0010010", "0010001", "0010000", "0001010", "0001001", "0001000",
    "0000101", "0000100", "0000010", "0000001", "0000000",
]
PRINTED_E8 = [
    "11111111", "11101111", "11101011", "10010111", "10010101", "10010011",
    "10010010", "10001001", "10000111", "10000101", "10000100", "10000011",
    "10000010", "10000001", "10000000", "01000001", "01000000", "00100010",
    "00010011", "00010010", "00010001", "00001001", "00001000", "00000100",
    "00000011", "00000010", "00000001", "00000000",
]

STATED_COUNTS = {"G2": 3, "F4": 8, "E6": 30, "E7": 29, "E8": 29}
COLORING_COUNTS = {"G2": 4, "F4": 16, "E6": 64, "E7": 128, "E8": 256}
# colorings that survive the dim g_0 >= dim g_1 bound
DIMENSION_SURVIVORS = {"F4": 9, "E6": 37, "E7": 46, "E8": 40}

# Displayed Richardson matrices: nonzero entries (row, col) -> value, 1-based.
DISPLAYED_MATRICES = {
    ("A", (1, 2, 3, 1)): {(1, 2): 1, (2, 6): 1, (3, 5): 1, (6, 7): 1},
    ("C", (3, 4, 3)): {(1, 7): 1, (2, 5): 1, (3, 4): 1, (4, 10): 1, (6, 9): -1, (7, 8): -1},
    ("C", (2, 4, 4, 2)): {
        (1, 4): 1, (2, 3): 1, (3, 10): 1, (4, 9): 1, (5, 8): 1, (6, 7): 1, (9, 12): -1, (10, 11): -1,
    },
    ("B", (3, 5, 3)): {
        (1, 8): 1, (2, 5): 1, (2, 7): 1, (3, 4): 1, (4, 11): -1, (5, 10): -1, (7, 10): -1, (8, 9): -1,
    },
    ("D", (2, 3, 3, 2)): {(1, 4): 1, (2, 3): 1, (3, 7): 1, (4, 8): -1, (7, 10): -1, (8, 9): -1},
    ("B", (4, 3, 4)): {
        (1, 7): 1, (2, 6): 1, (3, 6): 1, (4, 5): 1, (5, 11): -1, (6, 9): -1, (6, 10): -1, (7, 8): -1,
    },
    ("D", (1, 3, 2, 2, 3, 1)): {
        (1, 2): 1, (2, 6): 1, (3, 5): 1, (5, 7): 1, (6, 8): -1, (7, 11): -1, (8, 10): -1, (11, 12): -1,
    },
}


def as_tuples(rows: list[str]) -> set[tuple[int, ...]]:
    return {tuple(int(c) for c in row) for row in rows}
