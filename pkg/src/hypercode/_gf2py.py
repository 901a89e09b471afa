"""Pure-Python GF(2) column reduction (big-int bitset columns).

Fallback for the compiled kernel in ``_gf2core``; same interface.
"""

from __future__ import annotations


def reduce_lows(columns, n_rows=None):
    """Left-to-right column reduction over GF(2).

    ``columns`` is a list of sorted row-index lists (one per column).
    Returns, for each column, the row index of its lowest 1 after
    reduction, or -1 if the column was zeroed out.  The number of
    non-negative entries is the rank of the matrix.
    """
    lows: list[int] = []
    reduced: list[int] = []
    low_to_col: dict[int, int] = {}
    for rows in columns:
        bits = 0
        for r in rows:
            bits |= 1 << r
        while bits:
            low = bits.bit_length() - 1
            pivot = low_to_col.get(low)
            if pivot is None:
                break
            bits ^= reduced[pivot]
        reduced.append(bits)
        if bits:
            low = bits.bit_length() - 1
            low_to_col[low] = len(reduced) - 1
            lows.append(low)
        else:
            lows.append(-1)
    return lows
