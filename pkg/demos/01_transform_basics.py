#!/usr/bin/env python3
"""Walkthrough: prime fields, linear codes, and the hull-preserving transform.

Builds a small code, applies the row transform r_i' = r_i + (r_i,y)x - (r_i,x)y
with an isotropic pair, and shows what the construction guarantees: the Gram
matrix G G^T (hence the hull dimension) never changes.
"""
import random

from hullkit import (
    GF2,
    FieldMatrix,
    FieldVector,
    LinearCode,
    PrimeField,
    TransformPair,
    gram_matrix,
    hull_dim,
    is_lcd,
    m_matrix,
    matmul,
    min_weight,
    transform_code,
    transform_rows,
)

# --- a tiny LCD code in standard form [I_k | A] ------------------------------
a_block = FieldMatrix(GF2, [
    [1, 1, 0, 1, 0, 0],
    [0, 1, 1, 0, 1, 0],
    [1, 0, 1, 0, 0, 1],
    [1, 1, 1, 1, 1, 1],
], cols=6)
code = LinearCode(FieldMatrix.identity(GF2, 4).hstack(a_block))
print("seed code:", code)
print("  hull dimension:", hull_dim(code), "| LCD:", is_lcd(code), "| d =", min_weight(code))

# --- an isotropic pair: (x,x) = (y,y) = (x,y) = 0 -----------------------------
x = FieldVector(GF2, [1, 1, 0, 0, 1, 1])
y = FieldVector(GF2, [0, 0, 1, 1, 1, 1])
pair = TransformPair(x, y)
print("\npair x =", x.to_string(), " y =", y.to_string())
print("  isotropic:", pair.isotropic, "| de_safe:", pair.de_safe)

# --- transform: same hull dimension, possibly different minimum weight --------
out = transform_code(code, pair)          # checked mode verifies the guarantee
print("\ntransformed code:", out)
print("  hull dimension:", hull_dim(out), "| LCD:", is_lcd(out), "| d =", min_weight(out))
assert gram_matrix(out) == gram_matrix(code)
print("  G G^T unchanged entrywise - the mechanism behind hull preservation")

# --- the matrix form: A(x,y) = A M(x,y) ---------------------------------------
m = m_matrix(pair)
a2 = transform_rows(a_block, pair)
assert a2 == matmul(a_block, m)
print("\nM(x,y) = I + y^T x - x^T y reproduces the row formula:  A(x,y) = A M(x,y)")

# --- the same machinery is field-generic --------------------------------------
gf5 = PrimeField(5)
rng = random.Random(1)
a5 = FieldMatrix(gf5, [[rng.randrange(5) for _ in range(4)] for _ in range(2)], cols=4)
seed5 = LinearCode(FieldMatrix.identity(gf5, 2).hstack(a5))
pair5 = TransformPair(FieldVector(gf5, [1, 2, 0, 0]), FieldVector(gf5, [0, 0, 1, 2]))
out5 = transform_code(seed5, pair5)
print("\nGF(5) seed [6,2]: hull", hull_dim(seed5), "->", hull_dim(out5), "(preserved)")

# sanity: a non-isotropic pair is refused in checked mode
bad = TransformPair(FieldVector(GF2, [1] + [0] * 5), FieldVector(GF2, [0, 1] + [0] * 4))
try:
    transform_code(code, bad)
except Exception as e:
    print("\nchecked mode refuses a hypothesis-free pair:", type(e).__name__)
print("unchecked mode applies the bare formula:", transform_code(code, bad, mode="unchecked"))
