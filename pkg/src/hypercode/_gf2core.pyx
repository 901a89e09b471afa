# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled GF(2) column reduction over packed 64-bit words.

Columns are stored as individually sized word buffers (magnitude only),
so memory and XOR cost scale with the actual column heights.
"""

from libc.stdlib cimport calloc, malloc, free
from libc.stdint cimport uint64_t


cdef inline Py_ssize_t _low_below(uint64_t* col, Py_ssize_t from_word):
    # highest set bit, scanning downward from from_word (inclusive)
    cdef Py_ssize_t w = from_word
    cdef uint64_t v
    cdef Py_ssize_t b
    while w >= 0:
        v = col[w]
        if v != 0:
            b = 63
            while (v >> b) == 0:
                b -= 1
            return w * 64 + b
        w -= 1
    return -1


def reduce_lows(columns, Py_ssize_t n_rows):
    """Same contract as hypercode._gf2py.reduce_lows."""
    cdef Py_ssize_t ncols = len(columns)
    if ncols == 0:
        return []
    cdef uint64_t** cols = <uint64_t**> calloc(ncols, sizeof(uint64_t*))
    cdef Py_ssize_t* low_to_col = NULL
    if cols == NULL:
        raise MemoryError()
    low_to_col = <Py_ssize_t*> malloc((n_rows + 1) * sizeof(Py_ssize_t))
    if low_to_col == NULL:
        free(cols)
        raise MemoryError()
    cdef Py_ssize_t i, j, r, w, top, low, pivot
    cdef uint64_t* col
    cdef uint64_t* pcol
    lows = []
    try:
        for i in range(n_rows + 1):
            low_to_col[i] = -1
        for j in range(ncols):
            rows = columns[j]
            if rows:
                top = max(rows) >> 6
                col = <uint64_t*> calloc(top + 1, sizeof(uint64_t))
                if col == NULL:
                    raise MemoryError()
                cols[j] = col
                for r in rows:
                    col[r >> 6] |= (<uint64_t> 1) << (r & 63)
                low = _low_below(col, top)
            else:
                low = -1
            # colliding columns share the same low, so each XOR touches
            # nothing above it and the low strictly decreases
            while low >= 0:
                pivot = low_to_col[low]
                if pivot < 0:
                    break
                pcol = cols[pivot]
                for w in range(low >> 6, -1, -1):
                    col[w] ^= pcol[w]
                low = _low_below(col, low >> 6)
            if low >= 0:
                low_to_col[low] = j
            lows.append(low)
        return lows
    finally:
        for j in range(ncols):
            if cols[j] != NULL:
                free(cols[j])
        free(cols)
        free(low_to_col)
