"""Frozen arrays for the text "alabaralalabarda", checked by hand.

All arrays are 1-based with a padding zero in slot 0, matching the library
convention.  Alphabet codes: a=1 b=2 d=3 l=4 r=5 (increasing byte order).
"""

RAW = b"alabaralalabarda"

SA = [0, 17, 16, 3, 11, 1, 9, 7, 5, 13, 4, 12, 15, 2, 10, 8, 6, 14]
LCP = [0, 0, 0, 1, 4, 1, 6, 3, 1, 2, 0, 3, 0, 0, 5, 2, 0, 1]

SA_REV = [0, 17, 16, 12, 4, 1, 14, 6, 8, 10, 13, 5, 2, 15, 7, 9, 11, 3]
LCP_REV = [0, 0, 0, 1, 5, 1, 1, 3, 3, 1, 0, 4, 0, 0, 2, 2, 0, 6]

# c_map[i] = fwd rank of the suffix starting where rev suffix of rank i
# ends; undefined at rank 1 (the reverse suffix covering the whole text).
C_MAP = [0, 0, 5, 8, 9, 2, 3, 4, 6, 7, 10, 11, 12, 13, 14, 15, 16, 17]

CODE = {"$": 0, "a": 1, "b": 2, "d": 3, "l": 4, "r": 5}


def ctx(s: str) -> tuple[int, ...]:
    """Encode a context string written with '$' for the terminator."""
    return tuple(CODE[ch] for ch in s)


# query("a", ell=1): (context, ds, de, count, rep_position) per match.
A_ELL1_MATCHES = [
    ("$al", 5, 5, 1, 1),
    ("bar", 10, 11, 2, 5),
    ("da$", 12, 12, 1, 16),
    ("lab", 13, 14, 2, 3),
    ("lal", 15, 15, 1, 9),
    ("ral", 16, 16, 1, 7),
]
A_ELL1_REV_RANGE = (2, 9)
A_ELL1_PART_STARTS = [2, 3, 5, 6, 9]
A_ELL1_MAPPED = [(5, 5), (10, 11), (12, 12), (13, 15), (16, 16)]
A_ELL1_POSITIONS = {
    "$al": [1],
    "bar": [5, 13],
    "da$": [16],
    "lab": [3, 11],
    "lal": [9],
    "ral": [7],
}
