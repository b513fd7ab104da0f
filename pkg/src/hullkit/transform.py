"""The hull-preserving row transform A(x,y), its matrix form M(x,y), and the
code-level operation with always-on postcondition checks.

Given a code with generator [I_k | A] and vectors x, y of length m = n-k,
row i of A(x,y) is

    r_i' = r_i + (r_i, y) x - (r_i, x) y.

When (x,x) = (y,y) = (x,y) = 0 the transformed code has the same hull
dimension as the input (so LCD maps to LCD and self-orthogonal to
self-orthogonal).  Over GF(2), when wt(x) = wt(y) = 0 mod 4 and (x,y) = 0,
double evenness is preserved as well.  ``transform_code`` in checked mode
verifies these conclusions on every call and fails loudly on violation.
"""
from __future__ import annotations

from typing import Literal

import numpy as np

from .code import (
    LinearCode,
    StandardForm,
    is_doubly_even,
    standard_form,
)
from .errors import (
    CodeParseError,
    DimensionError,
    HypothesisError,
    PostconditionError,
    UnsupportedFieldError,
)
from .field import (
    FieldMatrix,
    FieldVector,
    inner_product,
    matmul,
    transpose,
)

Mode = Literal["checked", "unchecked"]


class TransformPair:
    """Validated (x, y) pair; hypothesis flags are recomputed at construction.

    isotropic: (x,x) = (y,y) = (x,y) = 0, the hull-preservation hypothesis.
    de_safe:   GF(2) only, wt(x) = wt(y) = 0 (mod 4) and (x,y) = 0, the
               double-evenness-preservation hypothesis.

    Zero vectors are rejected: the transform degenerates to the identity.
    """

    __slots__ = ("x", "y", "isotropic", "de_safe")

    def __init__(self, x: FieldVector, y: FieldVector):
        if x.field != y.field or len(x) != len(y):
            raise DimensionError("x and y must share field and length")
        if x.is_zero() or y.is_zero():
            raise ValueError("zero vectors make the transform trivial; rejected")
        xx = inner_product(x, x)
        yy = inner_product(y, y)
        xy = inner_product(x, y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "isotropic", xx == 0 and yy == 0 and xy == 0)
        object.__setattr__(
            self,
            "de_safe",
            x.field.binary and x.weight % 4 == 0 and y.weight % 4 == 0 and xy == 0,
        )

    def __setattr__(self, name, value):
        raise AttributeError("TransformPair is immutable")

    @property
    def field(self):
        return self.x.field

    @property
    def length(self) -> int:
        return len(self.x)

    def __eq__(self, other) -> bool:
        return isinstance(other, TransformPair) and other.x == self.x and other.y == self.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        flags = []
        if self.isotropic:
            flags.append("isotropic")
        if self.de_safe:
            flags.append("de_safe")
        return f"TransformPair(m={self.length}, {'|'.join(flags) or 'unflagged'})"

    def swapped(self) -> "TransformPair":
        return TransformPair(self.y, self.x)

    # text format: two lines, "x=..." and "y=...", whitespace-free symbols
    @classmethod
    def parse(cls, text: str, field=None, source: str = "<string>") -> "TransformPair":
        from .field import GF2

        field = field or GF2
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if len(lines) != 2:
            raise CodeParseError(f"{source}: expected two lines 'x=...' and 'y=...'")
        vals = {}
        for i, ln in enumerate(lines, start=1):
            if "=" not in ln:
                raise CodeParseError(f"{source}:{i}: missing '=' in {ln!r}")
            name, _, body = ln.partition("=")
            name = name.strip()
            if name not in ("x", "y"):
                raise CodeParseError(f"{source}:{i}: expected 'x' or 'y', got {name!r}")
            body = "".join(body.split())
            try:
                vals[name] = FieldVector(field, [int(ch) for ch in body])
            except ValueError as e:
                raise CodeParseError(f"{source}:{i}: {e}") from None
        if set(vals) != {"x", "y"}:
            raise CodeParseError(f"{source}: need exactly one x= line and one y= line")
        return cls(vals["x"], vals["y"])

    def to_text(self) -> str:
        return f"x={self.x.to_string()}\ny={self.y.to_string()}"


def transform_rows(a: FieldMatrix, pair: TransformPair) -> FieldMatrix:
    """Apply r_i' = r_i + (r_i,y) x - (r_i,x) y to every row of ``a``."""
    if a.field != pair.field:
        raise DimensionError("matrix and pair fields differ")
    if a.cols != pair.length:
        raise DimensionError(f"matrix has {a.cols} columns, pair has length {pair.length}")
    if a.field.binary:
        # over GF(2) the signs vanish: r' = r xor (r.y)x xor (r.x)y
        xb, yb = pair.x.bits, pair.y.bits
        out = []
        for rb in a.row_bits:
            r = rb
            if (rb & yb).bit_count() & 1:
                r ^= xb
            if (rb & xb).bit_count() & 1:
                r ^= yb
            out.append(r)
        return FieldMatrix.from_bit_rows(out, a.cols)
    return _transform_rows_symbols(a, pair)


def _transform_rows_symbols(a: FieldMatrix, pair: TransformPair) -> FieldMatrix:
    """Field-generic signed path (differential twin of the GF(2) path)."""
    p = a.field.p
    mat = a.to_numpy()
    x = np.array(pair.x.symbols, dtype=np.int64)
    y = np.array(pair.y.symbols, dtype=np.int64)
    coeff_y = (mat @ y) % p
    coeff_x = (mat @ x) % p
    out = (mat + np.outer(coeff_y, x) - np.outer(coeff_x, y)) % p
    return FieldMatrix(a.field, out.tolist(), cols=a.cols)


def m_matrix(pair: TransformPair) -> FieldMatrix:
    """M(x,y) = I_m + y^T x - x^T y, so that A(x,y) = A M(x,y)."""
    p = pair.field.p
    m = pair.length
    x = np.array(pair.x.symbols, dtype=np.int64)
    y = np.array(pair.y.symbols, dtype=np.int64)
    out = (np.eye(m, dtype=np.int64) + np.outer(y, x) - np.outer(x, y)) % p
    return FieldMatrix(pair.field, out.tolist(), cols=m)


def transform_code(code: LinearCode | StandardForm, pair: TransformPair,
                   mode: Mode = "checked") -> LinearCode:
    """Build the transformed code with generator [I_k | A(x,y)].

    The input is brought to standard form first; the column permutation used
    (if any) is recorded in the output's provenance.  In checked mode the
    pair must carry a hypothesis flag, and the corresponding guaranteed
    conclusion is verified post hoc:

      isotropic -> G' G'^T = G G^T entrywise (hence hull dimension preserved);
      de_safe + doubly even input -> doubly even output.

    Unchecked mode applies the formula for arbitrary pairs, no guarantees.
    """
    if mode not in ("checked", "unchecked"):
        raise ValueError(f"unknown mode {mode!r}")
    form = code if isinstance(code, StandardForm) else standard_form(code)
    if form.field != pair.field:
        raise DimensionError("code and pair fields differ")
    if form.a_block.cols != pair.length:
        raise DimensionError(
            f"pair length {pair.length} != n-k = {form.a_block.cols}"
        )
    if mode == "checked" and not (pair.isotropic or pair.de_safe):
        raise HypothesisError(
            "checked mode needs an isotropic or de_safe pair; "
            "use mode='unchecked' for exploration"
        )
    a = form.a_block
    a2 = transform_rows(a, pair)
    prov: dict = {"transform_pair": (pair.x.to_string(), pair.y.to_string())}
    if not form.is_identity_permutation:
        prov["column_permutation"] = form.column_permutation
    out = LinearCode(
        FieldMatrix.identity(form.field, form.k).hstack(a2), provenance=prov
    )
    if mode == "checked":
        if pair.isotropic:
            gram_in = matmul(a, transpose(a))
            gram_out = matmul(a2, transpose(a2))
            if gram_in != gram_out:
                raise PostconditionError(
                    "G G^T changed under an isotropic pair; arithmetic bug"
                )
        if pair.de_safe and form.field.binary:
            seed_de = is_doubly_even(form.code())
            if seed_de and not is_doubly_even(out):
                raise PostconditionError(
                    "double evenness lost under a de_safe pair; arithmetic bug"
                )
    return out


def sign_variants(pair: TransformPair) -> list[TransformPair]:
    """The sign/swap orbit of an isotropic pair, for q >= 3 search dedup.

    Returns [(x,y), (-x,-y), (y,x), (x,-y), (-x,y)].  The first two always
    produce equal codes, and the last three produce equal codes.
    """
    if not pair.isotropic:
        raise HypothesisError("sign identities hold for isotropic pairs")
    x, y = pair.x, pair.y
    return [
        TransformPair(x, y),
        TransformPair(-x, -y),
        TransformPair(y, x),
        TransformPair(x, -y),
        TransformPair(-x, y),
    ]


def weight_identity_check(u: FieldVector, v: FieldVector) -> bool:
    """wt(u+v) = wt(u) + wt(v) - 2 wt(u*v) over GF(2) (test oracle; always true)."""
    if not u.field.binary or not v.field.binary:
        raise UnsupportedFieldError("weight identity is a GF(2) statement")
    if len(u) != len(v):
        raise DimensionError("length mismatch")
    return (u + v).weight == u.weight + v.weight - 2 * u.hadamard(v).weight


def mod4_weight_check(a: FieldMatrix, pair: TransformPair) -> bool:
    """Every row of A(x,y) has weight congruent to its source row mod 4.

    Requires a de_safe pair (test oracle; always true under the hypothesis).
    """
    if not a.field.binary:
        raise UnsupportedFieldError("mod-4 weight congruence is a GF(2) statement")
    if not pair.de_safe:
        raise HypothesisError("mod-4 congruence needs wt(x)=wt(y)=0 mod 4 and (x,y)=0")
    out = transform_rows(a, pair)
    return all(
        rb.bit_count() % 4 == ob.bit_count() % 4
        for rb, ob in zip(a.row_bits, out.row_bits)
    )
