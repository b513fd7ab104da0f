"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's fast paths: weight
distributions come from symbol-level enumeration, hull dimensions from
direct membership counting, N_t from a quadruple loop, and equivalence
from brute force over all n! permutations.  Tests freeze expected values
computed by these, then check the production kernels against them.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest

from hullkit import (
    GF2,
    FieldMatrix,
    FieldVector,
    LinearCode,
    PrimeField,
    TransformPair,
    dual,
    pure_double_circulant,
)
from hullkit.circulant import CirculantSpec

GF3 = PrimeField(3)
GF5 = PrimeField(5)


@pytest.fixture
def rng():
    return random.Random(0xC0DE)


def extended_hamming() -> LinearCode:
    """The [8,4,4] extended Hamming code as a pure double circulant."""
    return pure_double_circulant(CirculantSpec(FieldVector(GF2, [0, 1, 1, 1])))


def random_matrix(rng: random.Random, field: PrimeField, r: int, c: int) -> FieldMatrix:
    return FieldMatrix(field, [[rng.randrange(field.p) for _ in range(c)] for _ in range(r)], cols=c)


def random_code(rng: random.Random, field: PrimeField, n: int, k: int) -> LinearCode:
    """Random [n,k] code with a full-rank generator (rejection sampled)."""
    while True:
        try:
            return LinearCode(random_matrix(rng, field, k, n))
        except ValueError:
            continue


def random_standard_code(rng: random.Random, field: PrimeField, n: int, k: int) -> LinearCode:
    """Random code already in [I_k | A] form."""
    a = random_matrix(rng, field, k, n - k)
    return LinearCode(FieldMatrix.identity(field, k).hstack(a))


def random_vector(rng: random.Random, field: PrimeField, m: int) -> FieldVector:
    return FieldVector(field, [rng.randrange(field.p) for _ in range(m)])


def random_isotropic_pair(rng: random.Random, field: PrimeField, m: int) -> TransformPair:
    """Rejection-sample (x, y) with (x,x) = (y,y) = (x,y) = 0, both nonzero."""
    def iso(v):
        return sum(s * s for s in v.symbols) % field.p == 0

    while True:
        x = random_vector(rng, field, m)
        if x.is_zero() or not iso(x):
            continue
        for _ in range(200):
            y = random_vector(rng, field, m)
            if y.is_zero() or not iso(y):
                continue
            if sum(a * b for a, b in zip(x.symbols, y.symbols)) % field.p == 0:
                return TransformPair(x, y)


def random_de_safe_pair(rng: random.Random, m: int) -> TransformPair:
    """GF(2) pair with wt(x), wt(y) divisible by 4 and (x, y) = 0."""
    assert m >= 4
    while True:
        xv = rng.getrandbits(m)
        if xv == 0 or xv.bit_count() % 4:
            continue
        for _ in range(200):
            yv = rng.getrandbits(m)
            if yv == 0 or yv.bit_count() % 4:
                continue
            if (xv & yv).bit_count() % 2 == 0:
                return TransformPair(
                    FieldVector.from_bits(xv, m), FieldVector.from_bits(yv, m)
                )


# --- oracles ------------------------------------------------------------------

def enumerate_codewords_naive(code: LinearCode) -> list[tuple[int, ...]]:
    """All q^k codewords by symbol-level linear combination (no fast paths)."""
    p = code.field.p
    words = []
    for coeffs in product(range(p), repeat=code.k):
        word = [0] * code.n
        for c, row in zip(coeffs, code.generator.entries):
            if c:
                for j in range(code.n):
                    word[j] = (word[j] + c * row[j]) % p
        words.append(tuple(word))
    return words


def weight_distribution_naive(code: LinearCode) -> dict[int, int]:
    counts: dict[int, int] = {}
    for word in enumerate_codewords_naive(code):
        w = sum(1 for s in word if s)
        counts[w] = counts.get(w, 0) + 1
    return counts


def hull_dim_naive(code: LinearCode) -> int:
    """Count codewords lying in the dual; the hull has 2^dim of them."""
    dcode = dual(code)
    members = sum(
        1 for word in enumerate_codewords_naive(code)
        if dcode.contains(FieldVector(code.field, word))
    )
    dim = members.bit_length() - 1
    assert code.field.p ** dim == members or code.field.p != 2
    if code.field.p != 2:
        dim = 0
        while code.field.p ** (dim + 1) <= members:
            dim += 1
        assert code.field.p ** dim == members
    return dim


def nt_counts_naive(code: LinearCode, w: int, tuple_size: int = 4) -> dict[int, int]:
    """Quadruple-loop N_t oracle over symbol-level codewords."""
    rows = [word for word in enumerate_codewords_naive(code) if sum(map(bool, word)) == w]
    counts: dict[int, int] = {}
    for subset in combinations(range(code.n), tuple_size):
        t = 0
        for word in rows:
            prod = 1
            for j in subset:
                prod *= word[j]
            t += prod
        if t:
            counts[t] = counts.get(t, 0) + 1
    return counts


def equivalent_brute_force(c1: LinearCode, c2: LinearCode) -> bool:
    """Try all n! column permutations (binary, tiny n)."""
    assert c1.field.binary and c2.field.binary
    if (c1.n, c1.k) != (c2.n, c2.k):
        return False
    n = c1.n
    set2 = set()
    for word in enumerate_codewords_naive(c2):
        mask = 0
        for j, s in enumerate(word):
            if s:
                mask |= 1 << j
        set2.add(mask)
    gens = list(c1.generator.row_bits)
    for perm in permutations(range(n)):
        ok = True
        for g in gens:
            mapped = 0
            for j in range(n):
                if (g >> j) & 1:
                    mapped |= 1 << perm[j]
            if mapped not in set2:
                ok = False
                break
        if ok:
            return True
    return False
