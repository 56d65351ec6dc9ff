"""Exact linear algebra over a FieldSpec, backed by galois FieldArrays"""
from typing import List, Sequence, Tuple

import numpy as np

from algebra.field import FieldSpec

Matrix = List[List[int]]


def rref(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form without zero rows, and its pivot columns"""
    rows = [list(r) for r in rows if any(r)]
    if not rows or ncols == 0:
        return [], []
    reduced = field.to_array(rows).row_reduce()
    out: Matrix = []
    pivots: List[int] = []
    for row in np.asarray(reduced.view(np.ndarray), dtype=np.int64).tolist():
        nz = next((j for j, a in enumerate(row) if a), None)
        if nz is None:
            continue
        out.append([int(a) for a in row])
        pivots.append(nz)
    return out, pivots


def rank(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> int:
    return len(rref(field, rows, ncols)[1])


def null_space(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of {v : rows . v = 0} as rows in canonical reduced echelon form"""
    reduced, pivots = rref(field, rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis: Matrix = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = field.neg(row[f])
        basis.append(v)
    return rref(field, basis, ncols)[0]


def reduce_vector(field: FieldSpec, v: Sequence[int], basis: Matrix, pivots: Sequence[int]) -> List[int]:
    """Reduce v against an RREF basis, clearing every pivot column"""
    out = list(v)
    for row, pc in zip(basis, pivots):
        c = out[pc]
        if c:
            out = [field.sub(a, field.mul(c, b)) for a, b in zip(out, row)]
    return out


def in_span(field: FieldSpec, v: Sequence[int], basis: Matrix, pivots: Sequence[int]) -> bool:
    return not any(reduce_vector(field, v, basis, pivots))


def mat_inv(field: FieldSpec, a: Matrix) -> Matrix:
    return np.linalg.inv(field.to_array(a)).view(np.ndarray).astype(np.int64).tolist()


def mat_mul(field: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    return (field.to_array(a) @ field.to_array(b)).view(np.ndarray).astype(np.int64).tolist()
