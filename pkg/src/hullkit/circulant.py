"""Pure and bordered double circulant code constructors.

Row i+1 of a circulant matrix is row i rotated RIGHT by one position; the
choice of direction is validated downstream by the certified parameters of
the bundled length-56 seeds.
"""
from __future__ import annotations

from dataclasses import dataclass

from .code import LinearCode
from .field import FieldMatrix, FieldVector


@dataclass(frozen=True)
class CirculantSpec:
    first_row: FieldVector

    @property
    def size(self) -> int:
        return len(self.first_row)


def circulant_matrix(spec: CirculantSpec) -> FieldMatrix:
    """The l x l matrix whose row i is first_row rotated right i positions."""
    syms = spec.first_row.symbols
    l = len(syms)
    rows = [tuple(syms[(j - i) % l] for j in range(l)) for i in range(l)]
    return FieldMatrix(spec.first_row.field, rows, cols=l)


def pure_double_circulant(spec: CirculantSpec) -> LinearCode:
    """[2l, l] code with generator [I_l | R]."""
    r = circulant_matrix(spec)
    ident = FieldMatrix.identity(spec.first_row.field, spec.size)
    return LinearCode(ident.hstack(r))


def bordered_double_circulant(spec: CirculantSpec) -> LinearCode:
    """[2l+2, l+1] code with generator [I_{l+1} | B].

    B's first row is (0, 1, ..., 1); each remaining row is a 1 followed by
    the corresponding circulant row.
    """
    field = spec.first_row.field
    l = spec.size
    r = circulant_matrix(spec)
    border = [tuple([0] + [1] * l)]
    body = [tuple([1] + list(row)) for row in r.entries]
    b = FieldMatrix(field, border + body, cols=l + 1)
    ident = FieldMatrix.identity(field, l + 1)
    return LinearCode(ident.hstack(b))
