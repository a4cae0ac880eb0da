"""
Sparse exact linear algebra over a Field.

Row reduction is sympy's dict-of-dicts ``sdm_irref``; it only needs the
entries to support ``*``, ``-``, ``**-1`` and truthiness, which both
``Fraction`` and ``RationalFunction`` provide.
"""

from sympy.polys.matrices.sdm import sdm_irref, sdm_nullspace_from_rref

from app.features.exactalg.schema import FieldElement, SparseMatrix

SparseVector = dict[int, FieldElement]


def rref(m: SparseMatrix) -> tuple[dict[int, SparseVector], list[int], dict[int, set[int]]]:
    """
    Reduced row echelon form of m.

    Returns:
        tuple: (rref rows keyed by position, pivot columns, nonzero columns map)
    """
    rows = m.as_row_dicts()
    if not rows:
        return {}, [], {}
    return sdm_irref(rows)


def rank(m: SparseMatrix) -> int:
    _, pivots, _ = rref(m)
    return len(pivots)


def nullspace(m: SparseMatrix) -> list[SparseVector]:
    """
    Basis of the right kernel of m.

    Each basis vector is scaled so that its first nonzero entry is 1.
    The list is empty iff the kernel is trivial.
    """
    reduced, pivots, nonzero_cols = rref(m)
    one = m.field.one()
    basis, _ = sdm_nullspace_from_rref(reduced, one, m.cols, pivots, nonzero_cols)

    normalized = []
    for vector in basis:
        vector = {j: v for j, v in vector.items() if v}
        lead = vector[min(vector)]
        normalized.append({j: v / lead for j, v in sorted(vector.items())})
    return normalized
