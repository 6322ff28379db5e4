"""Select the elimination kernel: compiled if importable, else pure Python.

Set ``HILBGEOM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from typing import Mapping, Sequence

import numpy as np

from hilbgeom.modla import _pykernels

if os.environ.get("HILBGEOM_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from hilbgeom.modla import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

Row = Mapping[tuple, int]


def _dense_array(rows: Sequence[Row], index: Mapping[tuple, int]) -> np.ndarray:
    a = np.zeros((len(rows), len(index)), dtype=np.uint64)
    for i, row in enumerate(rows):
        for e, c in row.items():
            a[i, index[e]] = c
    return a


def _dense_lists(rows: Sequence[Row], index: Mapping[tuple, int]) -> list[list[int]]:
    out = []
    ncols = len(index)
    for row in rows:
        dense = [0] * ncols
        for e, c in row.items():
            dense[index[e]] = c
        out.append(dense)
    return out


def rank(rows: Sequence[Row], index: Mapping[tuple, int], p: int, backend: str | None = None) -> int:
    """Rank over F_p of sparse rows whose columns are labelled by ``index``."""
    if not rows or not index:
        return 0
    if (backend or BACKEND) == "cython":
        return int(_require_compiled().rank(_dense_array(rows, index), p))
    return _pykernels.rank(_dense_lists(rows, index), p)


def rref(rows: Sequence[Row], index: Mapping[tuple, int], p: int, backend: str | None = None):
    """Reduced row echelon form as (list of dense integer rows, pivot columns)."""
    if not rows or not index:
        return [], []
    if (backend or BACKEND) == "cython":
        a = _dense_array(rows, index)
        pivots = _require_compiled().rref(a, p)
        return [[int(x) for x in a[i]] for i in range(len(pivots))], pivots
    a = _dense_lists(rows, index)
    pivots = _pykernels.rref(a, p)
    return a[: len(pivots)], pivots


def _require_compiled():
    if _compiled is None:
        raise RuntimeError("compiled kernels are not available")
    return _compiled


def nullspace(rows: Sequence[Row], index: Mapping[tuple, int], p: int) -> list[list[int]]:
    """Basis (as dense vectors) of {v : row . v = 0 for every row}."""
    ncols = len(index)
    reduced, pivots = rref(rows, index, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-reduced[r][free]) % p
        basis.append(v)
    return basis
