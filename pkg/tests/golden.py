"""Literal matrices of the worked 8x12 / 10x14 example.

Rows are space-separated integers.  ``SUB`` and ``SUP`` are the two pencils,
``LINK`` the pencil of the linking module.  ``F1``/``F2`` form the embedding
of ``SUB`` into ``LINK`` (``F2`` acts on row space, ``F1`` on column space),
``G1``/``G2`` the projection of ``SUP`` onto ``LINK``.  ``C1, C2, D2`` are the
factors of the two rectangular composites (``D1`` is the identity),
``CP = C1 diag(C2, I2)`` is the right transform and ``BLOCKS`` holds the
completion blocks.
"""

SUB_A = [
    "0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 1",
]

SUB_B = [
    "0 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0",
]

SUP_A = [
    "0 1 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 1",
]

SUP_B = [
    "1 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 1 0",
]

LINK_A = [
    "0 0 0 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 1",
]

LINK_B = [
    "0 0 1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 1 0",
]

F1 = [
    "0 0 0 0 1 0 0 0 0 0 0 0",
    "1 0 0 0 0 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 0 0 1",
]

F2 = [
    "1 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0",
    "0 0 0 1 0 0 0 0",
    "0 0 0 0 1 0 0 0",
    "0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 1 0",
    "0 0 0 0 0 0 0 1",
]

G1 = [
    "0 0 0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0 0 0",
    "1 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 1",
]

G2 = [
    "1 0 0 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 1",
]

C1 = [
    "0 0 -1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 -1 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 -1 0 0 0 0 0 0 0 0 0",
    "-1 0 0 0 0 0 0 0 0 0 0 0 1 0",
    "-1 0 0 0 0 0 0 0 0 0 0 0 0 1",
    "0 0 0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0",
    "-1 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 -1 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 -1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 -1 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 -1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 -1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 -1 0 0",
]

C2 = [
    "0 0 0 0 -1 0 0 0 0 0 0 0",
    "-1 0 0 0 0 0 0 0 0 0 0 0",
    "0 -1 0 0 0 0 0 0 0 0 0 0",
    "0 0 -1 0 0 0 0 0 0 0 0 0",
    "0 0 0 -1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 -1 0 0 0 0",
    "0 0 0 0 0 0 0 0 -1 0 0 0",
    "0 0 0 0 0 0 0 0 0 -1 0 0",
    "0 0 0 0 0 0 0 0 0 0 -1 0",
    "0 0 0 0 0 0 0 0 0 0 0 -1",
]

D2 = [
    "1 0 0 0 0 0 0 0 0 0",
    "0 1 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 1",
    "0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0",
]

CP = [
    "0 1 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0 1 0",
    "0 0 0 0 1 0 0 0 0 0 0 0 0 1",
    "0 0 0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 0 0 0 0 0 0",
    "1 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0",
]

BLOCKS = {
    "A12": ["0 0", "0 0", "1 0", "0 0", "0 0", "0 0", "0 0", "0 0"],
    "B12": ["0 0", "0 0", "0 0", "0 1", "0 0", "0 0", "0 0", "0 0"],
    "A21": ["0 0 0 0 1 0 0 0 0 0 0 0", "0 0 0 0 0 0 0 1 0 0 0 0"],
    "B21": ["0 0 0 0 0 0 1 0 0 0 0 0", "1 0 0 0 0 0 0 0 0 0 0 0"],
    "A22": ["0 0", "0 0"],
    "B22": ["0 0", "0 0"],
}


def as_rows(strings):
    return [[int(tok) for tok in s.split()] for s in strings]
