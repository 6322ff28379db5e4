"""Pure-Python Gaussian elimination over F_p; same contract as the compiled kernels."""

from __future__ import annotations


def _eliminate(a: list[list[int]], p: int, reduce_above: bool) -> list[int]:
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        row = a[r]
        inv = pow(row[c], p - 2, p)
        nz = [j for j in range(c, ncols) if row[j]]
        for j in nz:
            row[j] = row[j] * inv % p
        start = 0 if reduce_above else r + 1
        for i in range(start, nrows):
            if i == r:
                continue
            other = a[i]
            f = other[c]
            if f:
                for j in nz:
                    other[j] = (other[j] - f * row[j]) % p
        pivots.append(c)
        r += 1
    return pivots


def rank(a: list[list[int]], p: int) -> int:
    """Rank of ``a`` over F_p; ``a`` is overwritten."""
    return len(_eliminate(a, p, False))


def rref(a: list[list[int]], p: int) -> list[int]:
    """Reduce ``a`` in place to reduced row echelon form; return pivot columns."""
    return _eliminate(a, p, True)
