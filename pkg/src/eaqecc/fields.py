"""Finite fields GF(p^m) with integer-encoded elements.

An element of GF(p^m) is stored as the integer whose base-p digits d_0 ... d_{m-1}
are the coefficients of its residue polynomial modulo the field's modulus,
constant term first.  All heavy lifting is vectorised over numpy ``int64``
arrays; :class:`FieldElement` is a thin scalar wrapper for interactive use.

Multiplication goes through full ``q x q`` tables when q <= 256, through
log/antilog tables when q <= 2**16, and through schoolbook polynomial
reduction above that.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .conway import CONWAY
from .errors import DivisionByZero, NoSubfieldRegistered, SearchExhausted, SpecMismatch

MAX_ORDER = 2**31 - 1
LOG_TABLE_LIMIT = 2**16
FULL_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def to_digits(v: int, p: int, m: int) -> list[int]:
    ds = []
    for _ in range(m):
        v, d = divmod(v, p)
        ds.append(d)
    return ds


def from_digits(ds, p: int) -> int:
    v = 0
    for d in reversed(list(ds)):
        v = v * p + int(d)
    return v


# -- polynomials over F_p, coefficient lists with the constant term first ----


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_divmod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        coef = a[-1] * inv_lead % p
        quot[shift] = coef
        for i, bi in enumerate(b):
            a[i + shift] = (a[i + shift] - coef * bi) % p
        a = _trim(a)
    return _trim(quot), a


def _poly_mulmod(a, b, mod, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_divmod(prod, mod, p)[1]


def _poly_powmod(a, e, mod, p):
    result = [1]
    base = _poly_divmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def is_irreducible(coeffs, p: int) -> bool:
    """Rabin-style test: gcd(x^(p^i) - x, f) = 1 for 1 <= i <= m/2."""
    f = _trim(coeffs)
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        xp = _poly_powmod(xp, p, f, p)
        g = _poly_gcd(f, _poly_sub(xp, x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in range(p**m):
        coeffs = to_digits(low, p, m) + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise SearchExhausted(f"no irreducible polynomial of degree {m} over F_{p}")


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Conway polynomial when tabulated, else the smallest monic irreducible."""
    if (p, m) in CONWAY:
        return CONWAY[(p, m)]
    return smallest_irreducible(p, m)


class GF:
    """The finite field GF(p^m) defined by a monic irreducible modulus.

    Instances are immutable; build them through :func:`field` so that equal
    specs share their tables.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**m
        if q > MAX_ORDER:
            raise ValueError(f"field order {p}^{m} exceeds 2^31 - 1")
        if modulus is None:
            modulus = default_modulus(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._pw = p ** np.arange(m, dtype=np.int64)
        self._add_t = self._mul_t = None
        self._exp = self._log = None
        self._gen = None
        if m > 1 and q <= LOG_TABLE_LIMIT:
            self._build_tables()

    # -- identity ----------------------------------------------------------

    @property
    def poly(self) -> int:
        """Modulus encoded as sum c_i p^i (constant term first)."""
        return from_digits(self.modulus, self.p)

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, poly={self.poly})"

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    @property
    def characteristic(self) -> int:
        return self.p

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, value)

    # -- tables ------------------------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        pa = _trim(to_digits(a, self.p, self.m))
        pb = _trim(to_digits(b, self.p, self.m))
        r = _poly_mulmod(pa, pb, list(self.modulus), self.p)
        return from_digits(r, self.p)

    def _pow_slow(self, a: int, e: int) -> int:
        if self.m == 1:
            return pow(a, e, self.p)
        r = _poly_powmod(_trim(to_digits(a, self.p, self.m)), e, list(self.modulus), self.p)
        return from_digits(r, self.p)

    @property
    def generator(self) -> int:
        """Smallest primitive element in encoding order."""
        if self._gen is None:
            if self.q == 2:
                self._gen = 1
                return 1
            factors = prime_factors(self.q - 1)
            for g in range(2, self.q):
                if all(self._pow_slow(g, (self.q - 1) // r) != 1 for r in factors):
                    self._gen = g
                    break
        return self._gen

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        g = self.generator
        # columns: digit vectors of g * x^j
        mg = np.array([to_digits(self._mul_slow(g, p**j), p, m) for j in range(m)]).T
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        v = np.zeros(m, dtype=np.int64)
        v[0] = 1
        for i in range(q - 1):
            e = int(v @ self._pw)
            exp[i] = e
            log[e] = i
            v = (mg @ v) % p
        exp[q - 1 :] = exp[: q - 1]
        self._exp, self._log = exp, log
        if q <= FULL_TABLE_LIMIT:
            digits = self._digits(np.arange(q))
            self._add_t = ((digits[:, None, :] + digits[None, :, :]) % p) @ self._pw
            lm = (log[:, None] + log[None, :]) % (q - 1)
            mul = exp[lm]
            mul[0, :] = 0
            mul[:, 0] = 0
            self._mul_t = mul
            self._neg_t = ((-digits) % p) @ self._pw

    def _digits(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pw) % self.p

    # -- vectorised arithmetic --------------------------------------------

    @staticmethod
    def _out(r):
        r = np.asarray(r, dtype=np.int64)
        return int(r) if r.ndim == 0 else r

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return self._out(a ^ b)
        if self.m == 1:
            return self._out((a + b) % self.p)
        if self._add_t is not None:
            return self._out(self._add_t[a, b])
        s = (self._digits(a) + self._digits(b)) % self.p
        return self._out(s @ self._pw)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return self._out(a)
        if self.m == 1:
            return self._out((-a) % self.p)
        if self._add_t is not None:
            return self._out(self._neg_t[a])
        return self._out(((-self._digits(a)) % self.p) @ self._pw)

    def sub(self, a, b):
        if self.p == 2:
            return self.add(a, b)
        if self.m == 1:
            a = np.asarray(a, dtype=np.int64)
            return self._out((a - np.asarray(b, dtype=np.int64)) % self.p)
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return self._out(a * b % self.p)
        if self._mul_t is not None:
            return self._out(self._mul_t[a, b])
        if self._exp is not None:
            r = self._exp[self._log[a] + self._log[b]]
            return self._out(np.where((a == 0) | (b == 0), 0, r))
        f = np.frompyfunc(lambda x, y: self._mul_slow(int(x), int(y)), 2, 1)
        return self._out(np.asarray(f(a, b), dtype=object).astype(np.int64))

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero(f"zero has no inverse in {self}")
        return self.pow(a, -1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        e = int(e)
        if e < 0:
            if np.any(a == 0):
                raise DivisionByZero(f"zero has no inverse in {self}")
            e %= self.q - 1
        if e == 0:
            return self._out(np.ones_like(a))
        if self._exp is not None:
            r = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
            return self._out(np.where(a == 0, 0, r))
        f = np.frompyfunc(lambda x: self._pow_slow(int(x), e), 1, 1)
        return self._out(np.asarray(f(a), dtype=object).astype(np.int64))

    def frob(self, a, s: int = 1):
        """x -> x^(p^s), applied elementwise."""
        s %= self.m
        if s == 0 or self.m == 1:
            return self._out(np.asarray(a, dtype=np.int64).copy())
        return self.pow(a, self.p**s)

    def trace(self, a):
        """Absolute trace to the prime field; result values lie in [0, p)."""
        a = np.asarray(a, dtype=np.int64)
        t = a.copy()
        x = a
        for _ in range(self.m - 1):
            x = self.pow(x, self.p)
            t = self.add(t, x)
        return self._out(t)

    # -- subfield of a quadratic extension ---------------------------------

    @functools.cached_property
    def subfield(self) -> "GF":
        """GF(p^(m/2)) with a fixed embedding; only quadratic extensions have one."""
        if self.m % 2:
            raise NoSubfieldRegistered(f"{self} is not a quadratic extension")
        return field(self.p, self.m // 2)

    @functools.cached_property
    def _embedding(self) -> np.ndarray:
        sub = self.subfield
        h = sub.m
        qs = sub.q
        # elements fixed by x -> x^(p^h) form the subfield
        step = (self.q - 1) // (qs - 1)
        g = self.generator
        fixed = np.array([self._pow_slow(g, step * k) for k in range(qs - 1)], dtype=np.int64)
        # evaluate the subfield modulus at every candidate (Horner)
        val = np.full_like(fixed, sub.modulus[-1])
        for c in reversed(sub.modulus[:-1]):
            val = self.add(self.mul(val, fixed), int(c))
        roots = np.sort(fixed[np.atleast_1d(val) == 0])
        if roots.size == 0:
            raise SearchExhausted("subfield modulus has no root in the extension")
        beta = int(roots[0])
        powers = [1]
        for _ in range(h - 1):
            powers.append(self.mul(powers[-1], beta))
        digits = sub._digits(np.arange(qs)).reshape(qs, h)
        emb = np.zeros(qs, dtype=np.int64)
        for i in range(h):
            emb = self.add(emb, self.mul(digits[:, i], powers[i]))
        return np.atleast_1d(emb)

    @functools.cached_property
    def _restriction(self) -> np.ndarray:
        r = np.full(self.q, -1, dtype=np.int64)
        r[self._embedding] = np.arange(self.subfield.q)
        return r

    def embed(self, a):
        """Map subfield-encoded values into this field."""
        return self._out(self._embedding[np.asarray(a, dtype=np.int64)])

    def restrict(self, a):
        """Inverse of :meth:`embed`; fails on values outside the subfield."""
        r = self._restriction[np.asarray(a, dtype=np.int64)]
        if np.any(r < 0):
            raise SpecMismatch("value does not lie in the subfield")
        return self._out(r)

    def conj(self, a):
        """The q-power Frobenius x -> x^q of GF(q^2)/GF(q)."""
        if self.m % 2:
            raise NoSubfieldRegistered(f"{self} is not a quadratic extension")
        return self.frob(a, self.m // 2)


@functools.lru_cache(maxsize=None)
def _field_cached(p, m, modulus):
    return GF(p, m, modulus)


def field(p: int, m: int = 1, modulus=None) -> GF:
    """Return the (shared) GF(p^m) instance; ``modulus`` may be a tuple or poly int."""
    if modulus is None:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        modulus = default_modulus(p, m)
    elif isinstance(modulus, int):
        modulus = tuple(to_digits(modulus, p, m + 1))
    return _field_cached(p, m, tuple(int(c) for c in modulus))


class FieldElement:
    """A scalar of a :class:`GF`, supporting the usual operators."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: GF, value):
        value = int(value)
        if not 0 <= value < spec.q:
            raise ValueError(f"{value} is not an element encoding of {spec}")
        self.spec = spec
        self.value = value

    def _other(self, y):
        if isinstance(y, FieldElement):
            if y.spec != self.spec:
                raise SpecMismatch(f"{self.spec} vs {y.spec}")
            return y.value
        if isinstance(y, (int, np.integer)):
            return int(y) % self.spec.p
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.spec, v)

    def __add__(self, y):
        v = self._other(y)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, y):
        v = self._other(y)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.sub(self.value, v))

    def __rsub__(self, y):
        v = self._other(y)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.sub(v, self.value))

    def __mul__(self, y):
        v = self._other(y)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, y):
        v = self._other(y)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.div(self.value, v))

    def __rtruediv__(self, y):
        v = self._other(y)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.div(v, self.value))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e):
        return self._wrap(self.spec.pow(self.value, int(e)))

    def inverse(self):
        return self._wrap(self.spec.inv(self.value))

    def __eq__(self, y):
        if isinstance(y, FieldElement):
            return self.spec == y.spec and self.value == y.value
        if isinstance(y, (int, np.integer)):
            return self.value == int(y)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.spec}({self.value})"


def arith(op: str, x: FieldElement, y=None) -> FieldElement:
    """Dispatch one of add/sub/mul/div/neg/inv/pow on field elements."""
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "pow":
        return x ** int(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def frobenius(x: FieldElement, s: int) -> FieldElement:
    return FieldElement(x.spec, x.spec.frob(x.value, s))


def trace_to_prime(x: FieldElement) -> int:
    return x.spec.trace(x.value)


def trace_relative(x: FieldElement) -> FieldElement:
    """tr_{q^2/q}(x) = x + x^q, returned as an element of the subfield."""
    F = x.spec
    t = F.add(x.value, F.conj(x.value))
    return FieldElement(F.subfield, F.restrict(t))


# -- special bases ------------------------------------------------------------


@dataclass(frozen=True)
class TraceOrthogonalBasis:
    """Basis gamma of GF(p^m) over F_p with diagonal trace Gram matrix.

    ``omega`` holds the diagonal of the inverse Gram matrix, so that
    ``omega[i] * gamma[i]`` is the dual basis.
    """

    field: GF
    gamma: tuple
    omega: tuple

    def gram(self) -> np.ndarray:
        F = self.field
        g = np.array(self.gamma, dtype=np.int64)
        return np.atleast_2d(F.trace(F.mul(g[:, None], g[None, :])))

    @functools.cached_property
    def dual(self) -> tuple:
        F = self.field
        return tuple(int(F.mul(w, g)) for w, g in zip(self.omega, self.gamma))

    def coords(self, a) -> np.ndarray:
        """Coordinates in gamma: x_j = omega_j * tr(x gamma_j)."""
        F = self.field
        a = np.asarray(a, dtype=np.int64)
        g = np.array(self.gamma, dtype=np.int64)
        t = np.asarray(F.trace(F.mul(a[..., None], g)))
        return (t * np.array(self.omega)) % F.p

    def dual_coords(self, a) -> np.ndarray:
        """Coordinates in the dual basis: y_j = tr(y gamma_j)."""
        F = self.field
        a = np.asarray(a, dtype=np.int64)
        g = np.array(self.gamma, dtype=np.int64)
        return np.asarray(F.trace(F.mul(a[..., None], g)))

    def combine(self, x, dual: bool = False) -> np.ndarray:
        """Inverse of coords/dual_coords along the last axis."""
        F = self.field
        x = np.asarray(x, dtype=np.int64)
        basis = self.dual if dual else self.gamma
        out = np.zeros(x.shape[:-1], dtype=np.int64)
        for j, b in enumerate(basis):
            out = F.add(out, F.mul(x[..., j], b))
        return np.asarray(out)


def _symmetric_gram_schmidt(F: GF, start: list[int]):
    """Diagonalise (x, y) -> tr(xy) over F_p starting from ``start``."""
    from .linalg import rref

    P = field(F.p)

    def b(x, y):
        return int(F.trace(F.mul(x, y)))

    def span_basis(vals):
        if not vals:
            return []
        R, r, _ = rref(P, F._digits(np.array(vals)).reshape(len(vals), F.m))
        return [int(row @ F._pw) for row in R[:r]]

    def acceptable(v, U):
        bv = b(v, v)
        if bv == 0:
            return None
        c = F.inv(bv)
        rest = span_basis([F.sub(u, F.mul(F.mul(b(u, v), c), v)) for u in U])
        if F.p == 2 and rest and all(b(w, w) == 0 for w in rest):
            return None
        return rest

    def candidates(U):
        yield from U
        for u, w in itertools.combinations(U, 2):
            yield F.add(u, w)
        for coeffs in itertools.product(range(F.p), repeat=len(U)):
            if any(coeffs):
                v = 0
                for c, u in zip(coeffs, U):
                    v = F.add(v, F.mul(c, u))
                yield v

    basis = []
    U = list(start)
    while U:
        for v in candidates(U):
            rest = acceptable(v, U)
            if rest is not None:
                basis.append(int(v))
                U = rest
                break
        else:
            raise SearchExhausted("no non-isotropic pivot left for the trace form")
    return basis


@functools.lru_cache(maxsize=None)
def find_trace_orthogonal_basis(F: GF) -> TraceOrthogonalBasis:
    """Deterministic trace-orthogonal basis of F over its prime field.

    In characteristic 2 a self-dual normal basis is tried first; otherwise the
    trace form is diagonalised starting from the power basis.
    """
    P = field(F.p)
    if F.m == 1:
        return TraceOrthogonalBasis(F, (1,), (1,))
    gamma = None
    if F.p == 2:
        for beta in range(1, min(F.q, 4096)):
            conj = [int(F.frob(beta, i)) for i in range(F.m)]
            tob = TraceOrthogonalBasis(F, tuple(conj), (1,) * F.m)
            if np.array_equal(tob.gram(), np.eye(F.m, dtype=np.int64)):
                return tob
    gamma = _symmetric_gram_schmidt(F, [F.p**i for i in range(F.m)])
    diag = [int(F.trace(F.mul(g, g))) for g in gamma]
    omega = tuple(int(P.inv(d)) for d in diag)
    tob = TraceOrthogonalBasis(F, tuple(gamma), omega)
    gram = tob.gram()
    if not np.array_equal(gram, np.diag(diag)):
        raise SearchExhausted("trace Gram matrix is not diagonal")
    return tob


@dataclass(frozen=True)
class NormalPair:
    """Normal basis {w, w^q} of GF(q^2) over GF(q)."""

    field: GF
    w: int
    w_q: int

    @property
    def lam(self) -> int:
        """w^(2q) - w^2, the denominator of the trace-alternating form."""
        F = self.field
        return int(F.sub(F.mul(self.w_q, self.w_q), F.mul(self.w, self.w)))


@functools.lru_cache(maxsize=None)
def find_normal_pair(F: GF) -> NormalPair:
    F.subfield  # raises for non-quadratic extensions
    for w in range(1, F.q):
        wq = int(F.conj(w))
        pair = NormalPair(F, w, wq)
        if pair.lam != 0:
            return pair
    raise SearchExhausted("no normal element found")
