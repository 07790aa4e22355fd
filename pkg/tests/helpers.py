"""Shared builders for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from chaincomm.complexes import ChainComplex, ChainEndomorphism
from chaincomm.fields import GF2, RATIONALS, Field, PrimeField
from chaincomm.matrices import Matrix

Q = RATIONALS
F2 = GF2
F3 = PrimeField(3)
F5 = PrimeField(5)


def mat(field: Field, rows) -> Matrix:
    return Matrix.from_rows(field, rows)


def exact_two_term(field: Field = Q, scalar=1) -> ChainComplex:
    """0 -> k -> k -> 0 with an isomorphism differential."""
    return ChainComplex(field, 0, [1, 1], [mat(field, [[scalar]])])


def zero_differential_complex(field: Field, dims) -> ChainComplex:
    return ChainComplex(
        field, 0, list(dims), [Matrix.zeros(field, dims[j + 1], dims[j]) for j in range(len(dims) - 1)]
    )


def corner_window(field: Field, width: int = 4) -> ChainComplex:
    """dims 2 everywhere, every differential the rank-one corner map."""
    d = mat(field, [[0, 1], [0, 0]])
    return ChainComplex(field, 0, [2] * width, [d] * (width - 1))


def alternating_reflection(c: ChainComplex) -> ChainEndomorphism:
    """phi_i = (-1)^i diag(1, -1) on a dims-2 window; a valid chain map for
    the rank-one corner differential."""
    field = c.field
    maps = []
    for i in c.degrees:
        sign = field.alternating_sign(i)
        maps.append(Matrix.diagonal(field, [sign, field.neg(sign)]))
    return ChainEndomorphism(c, maps)


def seeds(n: int, start: int = 0):
    for s in range(start, start + n):
        yield s, random.Random(s)
