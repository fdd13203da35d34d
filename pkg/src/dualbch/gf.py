"""Exact arithmetic in GF(p^k) and for polynomials over GF(q).

The extension field GF(p^k) is realized as GF(p)[x]/(f) where f is the
deterministically first primitive polynomial in lexicographic coefficient
order, so every run (and every implementation following the same rule)
picks the same primitive element alpha.  A prime-power subfield GF(q),
q = p^e with e | k, is bridged to its own standalone representation by
subfield_project / subfield_embed.

Scalars of GF(q) are packed integers in [0, q): the value sum(c_i * p^i)
of the polynomial-basis coordinates (c_0, ..., c_{e-1}).  For prime q the
packed value is just the residue.  ScalarField carries lookup tables for
packed-scalar arithmetic; Poly is a dense polynomial over such scalars.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
from sympy import factorint, isprime

MAX_TABLE_ORDER = 1 << 16  # exp/log tables only below this field order


def prime_power(q: int):
    """Return (p, e) with q = p^e, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factorint(q)
    if len(fac) != 1:
        return None
    (p, e), = fac.items()
    return int(p), int(e)


@dataclass(frozen=True)
class FieldElem:
    """Element of GF(p^k) in polynomial-basis coordinates, lowest degree first."""

    coeffs: tuple[int, ...]


# ---------------------------------------------------------------------------
# tuple-level polynomial arithmetic over GF(p), used during field construction
# ---------------------------------------------------------------------------

def _poly_mulmod(a, b, modulus, p):
    """(a * b) mod modulus over GF(p); a, b fixed-length coeff tuples."""
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce: modulus is monic, so x^k = -modulus[:k]
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i]
        if c == 0:
            continue
        prod[i] = 0
        for j in range(k):
            prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    return tuple(prod[:k])


def _poly_powmod(base, e, modulus, p):
    k = len(modulus) - 1
    result = tuple([1] + [0] * (k - 1))
    acc = base
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, modulus, p)
        acc = _poly_mulmod(acc, acc, modulus, p)
        e >>= 1
    return result


class FieldCtx:
    """GF(p^k) with a fixed primitive modulus and primitive generator.

    Immutable after construction; all operations are pure.  Internal exp/log
    tables are built lazily for orders up to MAX_TABLE_ORDER; beyond that,
    multiplication falls back to direct polynomial arithmetic.
    """

    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus  # length k+1, lowest degree first, monic
        if k == 1:
            gen = ((p - modulus[0]) % p,)  # root of x + c0
        else:
            gen = tuple([0, 1] + [0] * (k - 2))
        self.generator = FieldElem(gen)
        self._exp = None
        self._log = None
        self._subfields = {}

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.k}), modulus={self.modulus})"

    # -- packing -----------------------------------------------------------

    def pack(self, x: FieldElem) -> int:
        v = 0
        for c in reversed(x.coeffs):
            v = v * self.p + c
        return v

    def unpack(self, v: int) -> FieldElem:
        cs = []
        for _ in range(self.k):
            v, c = divmod(v, self.p)
            cs.append(c)
        return FieldElem(tuple(cs))

    def zero(self) -> FieldElem:
        return FieldElem((0,) * self.k)

    def one(self) -> FieldElem:
        return FieldElem((1,) + (0,) * (self.k - 1))

    # -- arithmetic ----------------------------------------------------------

    def add(self, x: FieldElem, y: FieldElem) -> FieldElem:
        p = self.p
        return FieldElem(tuple((a + b) % p for a, b in zip(x.coeffs, y.coeffs)))

    def sub(self, x: FieldElem, y: FieldElem) -> FieldElem:
        p = self.p
        return FieldElem(tuple((a - b) % p for a, b in zip(x.coeffs, y.coeffs)))

    def neg(self, x: FieldElem) -> FieldElem:
        p = self.p
        return FieldElem(tuple((-a) % p for a in x.coeffs))

    def _ensure_tables(self):
        if self._exp is not None or self.order > MAX_TABLE_ORDER:
            return
        n1 = self.order - 1
        exp = np.zeros(n1, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        cur = tuple([1] + [0] * (self.k - 1))
        gen = self.generator.coeffs
        for i in range(n1):
            v = 0
            for c in reversed(cur):
                v = v * self.p + c
            exp[i] = v
            log[v] = i
            cur = _poly_mulmod(cur, gen, self.modulus, self.p)
        self._exp = exp
        self._log = log

    def mul(self, x: FieldElem, y: FieldElem) -> FieldElem:
        self._ensure_tables()
        if self._exp is not None:
            a, b = self.pack(x), self.pack(y)
            if a == 0 or b == 0:
                return self.zero()
            n1 = self.order - 1
            return self.unpack(int(self._exp[(self._log[a] + self._log[b]) % n1]))
        return FieldElem(_poly_mulmod(x.coeffs, y.coeffs, self.modulus, self.p))

    def inv(self, x: FieldElem) -> FieldElem:
        if x == self.zero():
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(x, self.order - 2)

    def pow(self, x: FieldElem, e: int) -> FieldElem:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        self._ensure_tables()
        if self._exp is not None:
            v = self.pack(x)
            if v == 0:
                return self.zero() if e else self.one()
            n1 = self.order - 1
            return self.unpack(int(self._exp[(int(self._log[v]) * e) % n1]))
        return FieldElem(_poly_powmod(x.coeffs, e, self.modulus, self.p))


def field_new(p: int, k: int) -> FieldCtx:
    """Construct GF(p^k) with the lexicographically first primitive modulus.

    The search runs over monic degree-k polynomials ordered by the integer
    whose base-p digits are the non-leading coefficients (constant term as
    least significant digit).  The generator is the residue class of x.
    """
    if not isprime(p):
        raise ValueError(f"p={p} is not prime")
    if k < 1:
        raise ValueError(f"k={k} must be >= 1")
    if p**k - 1 >= (1 << 63):
        raise ValueError(f"p^k-1 = {p**k - 1} does not fit in 63 bits")
    n1 = p**k - 1
    prime_divisors = [int(r) for r in factorint(n1)] if n1 > 1 else []
    one = tuple([1] + [0] * (k - 1))
    for j in range(p**k):
        digits = []
        v = j
        for _ in range(k):
            v, d = divmod(v, p)
            digits.append(d)
        if digits[0] == 0:
            continue  # x divides the modulus; x would not be a unit
        modulus = tuple(digits) + (1,)
        if k == 1:
            x = ((p - digits[0]) % p,)
        else:
            x = tuple([0, 1] + [0] * (k - 2))
        # x has order p^k - 1 iff <x> exhausts all nonzero residues, which
        # forces the quotient ring to be a field, i.e. modulus is primitive.
        if _poly_powmod(x, n1, modulus, p) != one:
            continue
        if any(_poly_powmod(x, n1 // r, modulus, p) == one for r in prime_divisors):
            continue
        return FieldCtx(p, k, modulus)
    raise RuntimeError(f"no primitive polynomial found for GF({p}^{k})")  # unreachable


def elem_pow(ctx: FieldCtx, x: FieldElem, e: int) -> FieldElem:
    """x^e by square-and-multiply; x^0 = 1."""
    return ctx.pow(x, e)


# ---------------------------------------------------------------------------
# packed-scalar GF(q) arithmetic
# ---------------------------------------------------------------------------

class ScalarField:
    """Lookup-table arithmetic for GF(q) scalars packed as integers 0..q-1.

    Tables are small numpy arrays, so elementwise methods accept either ints
    or numpy arrays.  inv_t[0] is 0 as a sentinel; zero has no inverse.
    """

    def __init__(self, q):
        pp = prime_power(q)
        if pp is None:
            raise ValueError(f"q={q} is not a prime power")
        self.q = q
        self.p, self.e = pp
        if self.e == 1:
            self.ctx = None
            idx = np.arange(q, dtype=np.int32)
            self.add_t = (idx[:, None] + idx[None, :]) % q
            self.sub_t = (idx[:, None] - idx[None, :]) % q
            self.mul_t = (idx[:, None] * idx[None, :]) % q
            self.neg_t = (-idx) % q
            self.inv_t = np.array([0] + [pow(int(a), q - 2, q) for a in range(1, q)],
                                  dtype=np.int32)
        else:
            ctx = field_new(self.p, self.e)
            self.ctx = ctx
            elems = [ctx.unpack(v) for v in range(q)]
            add_t = np.zeros((q, q), dtype=np.int32)
            mul_t = np.zeros((q, q), dtype=np.int32)
            for a in range(q):
                for b in range(q):
                    add_t[a, b] = ctx.pack(ctx.add(elems[a], elems[b]))
                    mul_t[a, b] = ctx.pack(ctx.mul(elems[a], elems[b]))
            self.add_t = add_t
            self.mul_t = mul_t
            self.neg_t = np.array([ctx.pack(ctx.neg(elems[a])) for a in range(q)],
                                  dtype=np.int32)
            self.sub_t = self.add_t[:, self.neg_t]
            self.inv_t = np.array([0] + [ctx.pack(ctx.inv(elems[a]))
                                         for a in range(1, q)], dtype=np.int32)

    def __repr__(self):
        return f"ScalarField(GF({self.q}))"

    def add(self, a, b):
        return self.add_t[a, b]

    def sub(self, a, b):
        return self.sub_t[a, b]

    def mul(self, a, b):
        return self.mul_t[a, b]

    def neg(self, a):
        return self.neg_t[a]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("zero has no inverse")
        return self.inv_t[a]


@functools.lru_cache(maxsize=None)
def scalar_field(q: int) -> ScalarField:
    """Cached ScalarField for GF(q)."""
    return ScalarField(q)


def rref(mat: np.ndarray, field: ScalarField):
    """Reduced row echelon form of a packed-scalar matrix over GF(q).

    Returns (R, pivots) where pivots lists the pivot column of each of the
    first len(pivots) rows of R.
    """
    R = np.array(mat, dtype=np.int32, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c]) + r
        if nz.size == 0:
            continue
        if nz[0] != r:
            R[[r, nz[0]]] = R[[nz[0], r]]
        R[r] = field.mul_t[int(field.inv_t[R[r, c]]), R[r]]
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            factors = R[others, c]
            R[others] = field.sub_t[R[others], field.mul_t[factors[:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, pivots


# ---------------------------------------------------------------------------
# polynomials over GF(q)
# ---------------------------------------------------------------------------

class Poly:
    """Dense polynomial over GF(q); packed-scalar coefficients, lowest first.

    Trailing zeros are stripped; the zero polynomial has empty coeffs and
    degree -1.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: ScalarField):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)
        self.field = field
        if any(not 0 <= c < field.q for c in self.coeffs):
            raise ValueError("coefficient out of range for GF(q)")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @classmethod
    def zero(cls, field):
        return cls((), field)

    @classmethod
    def one(cls, field):
        return cls((1,), field)

    @classmethod
    def x_pow_minus_one(cls, n, field):
        """x^n - 1 over GF(q)."""
        return cls((int(field.neg_t[1]),) + (0,) * (n - 1) + (1,), field)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.coeffs == other.coeffs
                and self.field.q == other.field.q)

    def __hash__(self):
        return hash((self.coeffs, self.field.q))

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, GF({self.field.q}))"

    def _check(self, other):
        if self.field.q != other.field.q:
            raise ValueError("mixed fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        la, lb = len(self.coeffs), len(other.coeffs)
        a = np.zeros(max(la, lb), dtype=np.int32)
        b = np.zeros(max(la, lb), dtype=np.int32)
        a[:la] = self.coeffs
        b[:lb] = other.coeffs
        return Poly(f.add_t[a, b], f)

    def __sub__(self, other):
        self._check(other)
        return self + Poly(self.field.neg_t[np.array(other.coeffs, dtype=np.int32)],
                           self.field)

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        f = self.field
        a = np.array(self.coeffs, dtype=np.int64)
        b = np.array(other.coeffs, dtype=np.int64)
        if f.e == 1:
            return Poly(np.convolve(a, b) % f.q, f)
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int32)
        bb = b.astype(np.int32)
        for i, ai in enumerate(self.coeffs):
            if ai == 0:
                continue
            out[i:i + len(bb)] = f.add_t[out[i:i + len(bb)], f.mul_t[ai, bb]]
        return Poly(out, f)

    def scale(self, c):
        return Poly(self.field.mul_t[int(c), np.array(self.coeffs, dtype=np.int32)],
                    self.field)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        db = other.degree
        rem = np.zeros(max(len(self.coeffs), 1), dtype=np.int32)
        rem[:len(self.coeffs)] = self.coeffs
        if self.degree < db:
            return Poly.zero(f), Poly(rem, f)
        inv_lead = int(f.inv_t[other.coeffs[-1]])
        b = np.array(other.coeffs, dtype=np.int32)
        quo = np.zeros(self.degree - db + 1, dtype=np.int32)
        for i in range(self.degree, db - 1, -1):
            c = int(rem[i])
            if c == 0:
                continue
            fac = int(f.mul_t[c, inv_lead])
            quo[i - db] = fac
            rem[i - db:i + 1] = f.sub_t[rem[i - db:i + 1], f.mul_t[fac, b]]
        return Poly(quo, f), Poly(rem, f)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if self.is_zero or self.is_monic:
            return self
        return self.scale(int(self.field.inv_t[self.coeffs[-1]]))

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def reciprocal(self):
        """x^deg * p(1/x): the coefficient sequence reversed."""
        return Poly(tuple(reversed(self.coeffs)), self.field)

    def eval(self, x):
        """Evaluate at a packed GF(q) scalar via Horner."""
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = int(f.add_t[f.mul_t[acc, int(x)], c])
        return acc


# ---------------------------------------------------------------------------
# subfield bridge and minimal polynomials
# ---------------------------------------------------------------------------

def _subfield_data(ctx: FieldCtx, q: int):
    """Cached embedding of GF(q)'s own representation into ctx.

    The embedding sends the small field's generator gamma to r, where r is
    g^j for the smallest j >= 1 with mu(g^j) = 0, mu the small modulus and
    g = alpha^((order-1)/(q-1)).  This fixes the isomorphism deterministically.
    """
    if q in ctx._subfields:
        return ctx._subfields[q]
    pp = prime_power(q)
    if pp is None or pp[0] != ctx.p or ctx.k % pp[1] != 0:
        raise ValueError(f"GF({q}) is not a subfield of GF({ctx.p}^{ctx.k})")
    p, e = pp
    if e == 1:
        data = (None, None, None, None)
        ctx._subfields[q] = data
        return data
    small = scalar_field(q)
    g = ctx.pow(ctx.generator, (ctx.order - 1) // (q - 1))
    mu = small.ctx.modulus  # length e+1 over GF(p)
    r = None
    cand = g
    for _ in range(1, q):
        # evaluate mu at cand inside ctx (Horner with prime coefficients)
        acc = ctx.zero()
        for c in reversed(mu):
            acc = ctx.add(ctx.mul(acc, cand), ctx.unpack(c % p))
        if acc == ctx.zero():
            r = cand
            break
        cand = ctx.mul(cand, g)
    if r is None:
        raise RuntimeError("no root of the subfield modulus found")  # unreachable
    powers = [ctx.one()]
    for _ in range(1, e):
        powers.append(ctx.mul(powers[-1], r))
    # left inverse P of the k x e matrix M whose columns are the r-powers:
    # row-reduce [M | I_k]; the first e rows give [I_e | P].
    M = np.array([pw.coeffs for pw in powers], dtype=np.int32).T  # k x e
    aug = np.concatenate([M, np.eye(ctx.k, dtype=np.int32)], axis=1)
    R, pivots = rref(aug, scalar_field(p))
    if pivots[:e] != list(range(e)):
        raise RuntimeError("subfield basis is singular")  # unreachable
    P = R[:e, e:]  # e x k, P @ M = I_e over GF(p)
    data = (small, r, powers, P)
    ctx._subfields[q] = data
    return data


def subfield_project(ctx: FieldCtx, x: FieldElem, q: int) -> int:
    """Coordinates of x in the order-q subfield, as a packed GF(q) scalar.

    The map is a field isomorphism onto GF(q)'s standalone representation.
    Raises if x is not in the subfield (x^q != x).
    """
    if ctx.pow(x, q) != x:
        raise ValueError(f"element {x} is not in the order-{q} subfield")
    _, _, _, P = _subfield_data(ctx, q)
    if P is None:  # prime subfield: constants
        return int(x.coeffs[0])
    p, e = prime_power(q)
    xv = np.array(x.coeffs, dtype=np.int64)
    y = (P.astype(np.int64) @ xv) % p
    v = 0
    for c in reversed(y):
        v = v * p + int(c)
    return v


def subfield_embed(ctx: FieldCtx, v: int, q: int) -> FieldElem:
    """Inverse of subfield_project: lift a packed GF(q) scalar into ctx."""
    if not 0 <= v < q:
        raise ValueError(f"packed scalar {v} out of range for GF({q})")
    _, _, powers, P = _subfield_data(ctx, q)
    if P is None:
        return FieldElem((v % ctx.p,) + (0,) * (ctx.k - 1))
    p = ctx.p
    acc = ctx.zero()
    i = 0
    while v:
        v, d = divmod(v, p)
        if d:
            acc = ctx.add(acc, ctx.mul(ctx.unpack(d), powers[i]))
        i += 1
    return acc


def minimal_polynomial(ctx: FieldCtx, beta_power: FieldElem, coset, q: int) -> Poly:
    """prod_{j in coset} (x - beta^j) re-expressed over GF(q).

    beta_power must be beta^i for the smallest exponent i of the coset; the
    remaining roots are its iterated q-th powers (Frobenius orbit).  Raises
    if the orbit size disagrees with the coset or a coefficient lands
    outside GF(q).
    """
    d = len(coset)
    roots = [beta_power]
    for _ in range(d - 1):
        roots.append(ctx.pow(roots[-1], q))
    if ctx.pow(roots[-1], q) != beta_power:
        raise ValueError("coset is not Frobenius-closed for base q")
    # expand the product over the big field
    coeffs = [ctx.one()]
    for r in roots:
        nr = ctx.neg(r)
        nxt = [ctx.zero()] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = ctx.add(nxt[i + 1], c)
            nxt[i] = ctx.add(nxt[i], ctx.mul(c, nr))
        coeffs = nxt
    packed = []
    for c in coeffs:
        if ctx.pow(c, q) != c:
            raise ValueError("product coefficient falls outside GF(q); wrong coset?")
        packed.append(subfield_project(ctx, c, q))
    return Poly(packed, scalar_field(q))


def poly_eval_in_ext(ctx: FieldCtx, poly: Poly, point: FieldElem) -> FieldElem:
    """Evaluate a GF(q) polynomial at an extension-field point."""
    q = poly.field.q
    acc = ctx.zero()
    for c in reversed(poly.coeffs):
        acc = ctx.add(ctx.mul(acc, point), subfield_embed(ctx, c, q))
    return acc
