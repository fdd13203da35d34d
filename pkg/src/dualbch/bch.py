"""Narrow-sense BCH codes of length n = (q^m - 1)/lambda over GF(q).

A code is specified by (q, m, lambda_kind, delta).  The multiplier lambda
is carried in one of two shapes that the closed-form results distinguish:

  PowerForm(s)         lambda = q^s - 1 with s | m
  DivisorOfQMinus1(l)  lambda = l with l | q - 1 and l != q - 1

The two overlap exactly at lambda = q - 1, which is always normalized to
PowerForm(1) by the bch_spec factory (for q = 2 that is lambda = 1).

The defining set of C_delta with respect to beta = alpha^lambda is
T = C_1 u ... u C_{delta-1}; the generator polynomial is the product of
the minimal polynomials of beta^l over the distinct coset leaders l in T.
The dual's defining set is T_perp, the complement in Z_n of
T^{-1} = {n - i : i in T}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import CosetTable, coset_table
from .gf import FieldCtx, Poly, elem_pow, minimal_polynomial, prime_power, scalar_field


@dataclass(frozen=True)
class PowerForm:
    """lambda = q^s - 1 for a divisor s of m."""

    s: int


@dataclass(frozen=True)
class DivisorOfQMinus1:
    """lambda dividing q - 1, strictly smaller than q - 1."""

    lam: int


@dataclass(frozen=True)
class BchSpec:
    """Parameters of a narrow-sense BCH code of length (q^m - 1)/lambda."""

    q: int
    m: int
    lambda_kind: PowerForm | DivisorOfQMinus1
    delta: int

    def __post_init__(self):
        if prime_power(self.q) is None:
            raise ValueError(f"q={self.q} is not a prime power")
        if self.m < 1:
            raise ValueError(f"m={self.m} must be >= 1")
        lk = self.lambda_kind
        if isinstance(lk, PowerForm):
            if lk.s < 1 or self.m % lk.s:
                raise ValueError(f"s={lk.s} must be a positive divisor of m={self.m}")
        elif isinstance(lk, DivisorOfQMinus1):
            if lk.lam < 1 or (self.q - 1) % lk.lam:
                raise ValueError(f"lambda={lk.lam} must divide q-1={self.q - 1}")
            if lk.lam == self.q - 1:
                raise ValueError(
                    "lambda = q-1 must be expressed as PowerForm(1); "
                    "use the bch_spec factory to normalize")
        else:
            raise TypeError("lambda_kind must be PowerForm or DivisorOfQMinus1")
        if not 2 <= self.delta <= self.n:
            raise ValueError(f"delta={self.delta} out of range [2, {self.n}]")

    @property
    def lam(self) -> int:
        lk = self.lambda_kind
        return self.q**lk.s - 1 if isinstance(lk, PowerForm) else lk.lam

    @property
    def n(self) -> int:
        return (self.q**self.m - 1) // self.lam


def bch_spec(q: int, m: int, delta: int, lam: int | None = None,
             s: int | None = None) -> BchSpec:
    """Build a BchSpec from either a lambda divisor or a power-form s.

    Exactly one of lam and s must be given.  lam = q - 1 (including q = 2,
    lam = 1) is normalized to PowerForm(1).
    """
    if (lam is None) == (s is None):
        raise ValueError("give exactly one of lam and s")
    if s is not None:
        return BchSpec(q, m, PowerForm(s), delta)
    if lam == q - 1:
        return BchSpec(q, m, PowerForm(1), delta)
    return BchSpec(q, m, DivisorOfQMinus1(lam), delta)


class DefiningSet:
    """Subset of Z_n closed under multiplication by q, stored as a mask."""

    def __init__(self, n, q, mask, validate=True):
        self.n = n
        self.q = q
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (n,):
            raise ValueError("mask length must equal n")
        mask.setflags(write=False)
        self.mask = mask
        self._members = None
        if validate and not self.is_q_closed():
            raise ValueError("set is not closed under multiplication by q mod n")

    @classmethod
    def from_members(cls, n, q, members, validate=True):
        mask = np.zeros(n, dtype=bool)
        for a in members:
            if not 0 <= a < n:
                raise ValueError(f"member {a} out of range [0, {n})")
            mask[a] = True
        return cls(n, q, mask, validate=validate)

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            self._members = tuple(int(v) for v in np.flatnonzero(self.mask))
        return self._members

    def is_q_closed(self) -> bool:
        idx = (np.arange(self.n, dtype=np.int64) * self.q) % self.n
        return bool(np.all(self.mask[idx] == self.mask))

    def __contains__(self, a):
        return bool(self.mask[a % self.n])

    def __len__(self):
        return int(np.count_nonzero(self.mask))

    def __eq__(self, other):
        return (isinstance(other, DefiningSet) and self.n == other.n
                and self.q == other.q and bool(np.array_equal(self.mask, other.mask)))

    def __repr__(self):
        return f"DefiningSet(n={self.n}, q={self.q}, size={len(self)})"


def defining_set(spec: BchSpec, table: CosetTable) -> DefiningSet:
    """T = C_1 u ... u C_{delta-1}: residues whose leader is in [1, delta-1]."""
    if (table.n, table.q) != (spec.n, spec.q):
        raise ValueError(f"table is for (n={table.n}, q={table.q}), "
                         f"spec needs (n={spec.n}, q={spec.q})")
    lead = table.leader_of
    mask = (lead >= 1) & (lead <= spec.delta - 1)
    return DefiningSet(spec.n, spec.q, mask, validate=False)


def dual_defining_set(t: DefiningSet) -> DefiningSet:
    """T_perp = Z_n \\ T^{-1} where T^{-1} = {n - i mod n : i in T}."""
    idx = (t.n - np.arange(t.n, dtype=np.int64)) % t.n
    return DefiningSet(t.n, t.q, ~t.mask[idx], validate=False)


def bch_bound_from_set(s: DefiningSet) -> int:
    """1 + length of the longest cyclic run of consecutive residues in s."""
    mask = s.mask
    if mask.all():
        return s.n + 1
    if not mask.any():
        return 1
    # longest run in the doubled array never exceeds n once not all-true
    m2 = np.concatenate([mask, mask]).astype(np.int8)
    bounded = np.concatenate([[0], m2, [0]])
    edges = np.diff(bounded)
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    return int((ends - starts).max()) + 1


@dataclass(frozen=True)
class CodeParams:
    """Length, dimension, generator polynomial, and BCH bound of a cyclic code."""

    n: int
    k: int
    delta: int | None
    generator: Poly
    bch_bound: int


def _params_from_set(spec: BchSpec, ctx: FieldCtx, table: CosetTable,
                     dset: DefiningSet, delta) -> CodeParams:
    q, n = spec.q, spec.n
    if ctx.order != q**spec.m:
        raise ValueError(f"ctx has order {ctx.order}, expected q^m = {q**spec.m}")
    lam = spec.lam
    lead = table.leader_of
    leaders = np.unique(lead[dset.mask])
    gen = Poly.one(scalar_field(q))
    for l in leaders:
        coset = table.cosets[int(l)]
        beta_power = elem_pow(ctx, ctx.generator, lam * int(l))
        gen = gen * minimal_polynomial(ctx, beta_power, coset, q)
    assert gen.degree == len(dset), "generator degree must equal |defining set|"
    return CodeParams(n=n, k=n - len(dset), delta=delta, generator=gen,
                      bch_bound=bch_bound_from_set(dset))


def code_params(spec: BchSpec, ctx: FieldCtx, table: CosetTable) -> CodeParams:
    """Generator polynomial and dimensions of C_delta."""
    return _params_from_set(spec, ctx, table, defining_set(spec, table), spec.delta)


def dual_code_params(spec: BchSpec, ctx: FieldCtx, table: CosetTable) -> CodeParams:
    """Parameters of the cyclic code with defining set T_perp (the dual of C_delta)."""
    t_perp = dual_defining_set(defining_set(spec, table))
    return _params_from_set(spec, ctx, table, t_perp, None)


def generator_matrix(params: CodeParams) -> np.ndarray:
    """k x n matrix over GF(q) whose rows are x^j g(x), j = 0..k-1."""
    n, k = params.n, params.k
    g = np.array(params.generator.coeffs, dtype=np.int32)
    mat = np.zeros((k, n), dtype=np.int32)
    for j in range(k):
        mat[j, j:j + len(g)] = g
    return mat
