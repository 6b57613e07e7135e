"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A CycNum stores an element of Q(zeta_n) as its coordinate vector in the power
basis 1, zeta_n, ..., zeta_n^(phi(n)-1) of Q[x]/(Phi_n), where Phi_n is the
n-th cyclotomic polynomial.  The stored conductor is always minimal: after
every operation the element is re-expressed in the smallest Q(zeta_m) with
m | n that contains it, so equality is plain coefficient comparison.  Zero and
the rationals live at conductor 1.

>>> zeta(4) * zeta(4)
CycNum(-1)
>>> zeta(3) + zeta(3) ** 2
CycNum(-1)
>>> zeta(8) ** -1 == zeta(8) ** 7
True
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatch, InvalidAutomorphism, InvalidConductor

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Integer polynomial helpers (dense tuples, lowest degree first).

def _int_poly_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials; remainder must vanish.
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        quot[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise InvalidConductor(f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _prime_divisors(n: int) -> tuple[int, ...]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # Row k is the coordinate vector of zeta_n^k, for k in 0..n-1.
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    rows: list[tuple[int, ...]] = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        cur = [0] + cur
        lead = cur.pop()
        if lead:
            for i in range(phi):
                cur[i] -= lead * cyc[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _unit_index(n: int) -> dict[tuple[Fraction, ...], tuple[int, int]]:
    # Coordinate vector -> (sign, exponent) for the 2n roots of unity in Q(zeta_n).
    table = _power_table(n)
    index: dict[tuple[Fraction, ...], tuple[int, int]] = {}
    for j, row in enumerate(table):
        index.setdefault(tuple(Fraction(c) for c in row), (1, j))
        index.setdefault(tuple(Fraction(-c) for c in row), (-1, j))
    return index


# ---------------------------------------------------------------------------
# Conductor descent.

@lru_cache(maxsize=None)
def _descent_data(n: int, m: int):
    """Precomputed data for testing membership of Q(zeta_n) elements in Q(zeta_m).

    Returns (fixedness tests, solver rows): per kernel automorphism the
    column-wise integer matrix of its action (for an early-exit fixed-point
    test), and the top phi(m) rows of a matrix T with T . embed = identity,
    used to read off coordinates at conductor m.
    """
    phi_n, phi_m = euler_phi(n), euler_phi(m)
    kernel = tuple(k for k in range(2, n) if math.gcd(k, n) == 1 and k % m == 1)
    table_n = _power_table(n)
    tests = []
    for k in kernel:
        # Column i of the action: image_i = sum_j coeffs[j] * table[(jk) % n][i].
        cols = []
        for i in range(phi_n):
            cols.append(tuple((j, table_n[(j * k) % n][i]) for j in range(phi_n)
                              if table_n[(j * k) % n][i]))
        tests.append(tuple(cols))
    # Embedding matrix: column j is zeta_m^j written at conductor n.
    table = _power_table(n)
    step = n // m
    cols = [table[(j * step) % n] for j in range(phi_m)]
    # Row reduce [E | I] over Q to express the coordinate functionals.
    aug = [[Fraction(cols[j][i]) for j in range(phi_m)]
           + [_ONE if k == i else _ZERO for k in range(phi_n)]
           for i in range(phi_n)]
    row = 0
    pivots = []
    for col in range(phi_m):
        piv = next(i for i in range(row, phi_n) if aug[i][col] != 0)
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for i in range(phi_n):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    solver = tuple(tuple(aug[i][phi_m:]) for i in range(phi_m))
    return tuple(tests), solver


def _apply_exponent(n: int, coeffs: tuple[Fraction, ...], k: int) -> tuple[Fraction, ...]:
    # zeta_n^j -> zeta_n^(j*k), extended linearly.
    table = _power_table(n)
    out = [_ZERO] * euler_phi(n)
    for j, c in enumerate(coeffs):
        if c:
            for i, v in enumerate(table[(j * k) % n]):
                if v:
                    out[i] += c * v
    return tuple(out)


def _is_fixed(cols, coeffs) -> bool:
    # Early-exit coordinate comparison of sigma(z) against z.
    for i, col in enumerate(cols):
        acc = _ZERO
        for j, mult in col:
            c = coeffs[j]
            if c:
                acc += c if mult == 1 else c * mult
        if acc != coeffs[i]:
            return False
    return True


def _descend_once(n: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]] | None:
    for p in _prime_divisors(n):
        m = n // p
        if m == 1:
            continue
        tests, solver = _descent_data(n, m)
        if all(_is_fixed(cols, coeffs) for cols in tests):
            down = tuple(sum((r * c for r, c in zip(row, coeffs) if c), _ZERO)
                         for row in solver)
            return m, down
    return None


def _normalize(n: int, coeffs: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    # Minimal-conductor compression of a reduced coordinate vector.
    while n > 1:
        if not any(coeffs[1:]):
            return 1, (coeffs[0],)
        step = _descend_once(n, tuple(coeffs))
        if step is None:
            return n, tuple(coeffs)
        n, down = step
        coeffs = list(down)
    return 1, (coeffs[0] if coeffs else _ZERO,)


# ---------------------------------------------------------------------------
# The scalar type.

@dataclass(frozen=True)
class CycNum:
    """An element of the cyclotomic field Q(zeta_n), at minimal conductor n.

    Construct values through :func:`rational`, :func:`zeta`, or
    :meth:`CycNum.from_coeffs`; arithmetic is by the usual operators and is
    exact.

    >>> CycNum.from_coeffs([0, 0, 1], 6)    # zeta_6^2 descends to conductor 3
    CycNum(3, (0, 1))
    >>> CycNum.from_coeffs([1, 1, 1], 3)
    CycNum(0)
    """

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.conductor):
            raise InvalidConductor(
                f"need {euler_phi(self.conductor)} coordinates at conductor "
                f"{self.conductor}, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, coeffs, n: int) -> CycNum:
        """The element sum(c_i zeta_n^i), reduced mod Phi_n, at minimal conductor."""
        if n < 1:
            raise InvalidConductor(f"conductor must be positive, got {n}")
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > n:
            raise InvalidConductor(f"coefficient list longer than conductor {n}")
        phi = euler_phi(n)
        table = _power_table(n)
        vec = [_ZERO] * phi
        for k, c in enumerate(coeffs):
            if c:
                if k < phi:
                    vec[k] += c
                else:
                    for i, v in enumerate(table[k % n]):
                        if v:
                            vec[i] += c * v
        return cls(*_normalize(n, vec))

    @classmethod
    def _raw(cls, n: int, vec: list[Fraction]) -> CycNum:
        return cls(*_normalize(n, vec))

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_rational(self) -> Fraction:
        if self.conductor != 1:
            raise FieldMismatch(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, n: int) -> tuple[Fraction, ...]:
        # Coordinates of self at the (multiple) conductor n.
        if n == self.conductor:
            return self.coeffs
        table = _power_table(n)
        step = n // self.conductor
        out = [_ZERO] * euler_phi(n)
        for j, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(table[(j * step) % n]):
                    if v:
                        out[i] += c * v
        return tuple(out)

    def __add__(self, other) -> CycNum:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CycNum(1, (self.coeffs[0] + other.coeffs[0],))
        n = math.lcm(self.conductor, other.conductor)
        a, b = self._lift(n), other._lift(n)
        return CycNum._raw(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> CycNum:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycNum:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> CycNum:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1:
            c = self.coeffs[0]
            if not c:
                return CycNum(1, (_ZERO,))
            return CycNum(other.conductor, tuple(c * v for v in other.coeffs))
        if other.conductor == 1:
            c = other.coeffs[0]
            if not c:
                return CycNum(1, (_ZERO,))
            return CycNum(self.conductor, tuple(c * v for v in self.coeffs))
        n = math.lcm(self.conductor, other.conductor)
        a, b = self._lift(n), other._lift(n)
        phi = euler_phi(n)
        conv = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        table = _power_table(n)
        vec = list(conv[:phi])
        for k in range(phi, len(conv)):
            c = conv[k]
            if c:
                for i, v in enumerate(table[k % n]):
                    if v:
                        vec[i] += c * v
        return CycNum._raw(n, vec)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """The multiplicative inverse, by the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.conductor
        if n == 1:
            return CycNum(1, (1 / self.coeffs[0],))
        # Invert self mod Phi_n in Q[x]: Phi_n is irreducible, so gcd = 1.
        r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r1 = list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                phi = euler_phi(n)
                vec = [c * inv for c in s1[:phi]]
                vec += [_ZERO] * (phi - len(vec))
                return CycNum._raw(n, vec)
            # r0 = q r1 + r; s accumulates the Bezout coefficient of self.
            q = [_ZERO] * (len(r0) - len(r1) + 1)
            r = list(r0)
            for k in range(len(q) - 1, -1, -1):
                f = r[k + len(r1) - 1] / r1[-1]
                q[k] = f
                if f:
                    for i, d in enumerate(r1):
                        r[k + i] -= f * d
            del r[len(r1) - 1:]
            news = list(s0) + [_ZERO] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        if sc:
                            news[i + j] -= qc * sc
            r0, r1 = [Fraction(c) for c in r1], r
            s0, s1 = s1, news

    def __truediv__(self, other) -> CycNum:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.conductor == 1:
            if not other.coeffs[0]:
                raise ZeroDivisionError("division by zero")
            return self * CycNum(1, (1 / other.coeffs[0],))
        return self * other.inverse()

    def __rtruediv__(self, other) -> CycNum:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> CycNum:
        if k < 0:
            return self.inverse() ** (-k)
        result = one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> CycNum:
        """Complex conjugate (the automorphism zeta -> zeta^-1)."""
        n = self.conductor
        if n <= 2:
            return self
        return CycNum._raw(n, list(_apply_exponent(n, self.coeffs, n - 1)))

    def __repr__(self):
        if self.conductor == 1:
            return f"CycNum({self.coeffs[0]})"
        body = ", ".join(str(c) for c in self.coeffs)
        return f"CycNum({self.conductor}, ({body}))"


def _coerce(value) -> CycNum:
    if isinstance(value, CycNum):
        return value
    if isinstance(value, (int, Fraction)):
        return CycNum(1, (Fraction(value),))
    return NotImplemented


def rational(value) -> CycNum:
    """The rational number ``value`` as a CycNum at conductor 1."""
    return CycNum(1, (Fraction(value),))


def zero() -> CycNum:
    return CycNum(1, (_ZERO,))


def one() -> CycNum:
    return CycNum(1, (_ONE,))


def zeta(n: int, k: int = 1) -> CycNum:
    """The root of unity zeta_n^k, with zeta_n = e^(2 pi i / n).

    >>> zeta(6)
    CycNum(3, (1, 1))
    >>> zeta(5, 7) == zeta(5, 2)
    True
    """
    if n < 1:
        raise InvalidConductor(f"conductor must be positive, got {n}")
    row = _power_table(n)[k % n]
    return CycNum._raw(n, [Fraction(c) for c in row])


def sort_key(z: CycNum):
    """Canonical total order key: conductor, then coordinates lexicographically."""
    return (z.conductor, z.coeffs)


def root_of_unity_order(z: CycNum) -> int | None:
    """The least m with z**m == 1, or None if z is not a root of unity.

    Roots of unity in Q(zeta_n) are exactly +-zeta_n^j, so an exact table
    lookup against those 2n candidates decides the question.

    >>> root_of_unity_order(rational(-1))
    2
    >>> root_of_unity_order(zeta(6, 2))
    3
    >>> root_of_unity_order(rational(1) + zeta(4)) is None
    True
    """
    if not z:
        return None
    if any(c.denominator != 1 for c in z.coeffs):
        return None
    hit = _unit_index(z.conductor).get(z.coeffs)
    if hit is None:
        return None
    sign, j = hit
    n = z.conductor
    if sign > 0:
        return n // math.gcd(n, j)
    return 2 * n // math.gcd(2 * n, n + 2 * j)


def unit_log(z: CycNum) -> Fraction | None:
    """The a in [0, 1) with z = e^(2 pi i a), or None if z is not a root of unity."""
    if not z or any(c.denominator != 1 for c in z.coeffs):
        return None
    hit = _unit_index(z.conductor).get(z.coeffs)
    if hit is None:
        return None
    sign, j = hit
    a = Fraction(j, z.conductor)
    if sign < 0:
        a += Fraction(1, 2)
    return a % 1


def unit_exp(a: Fraction) -> CycNum:
    """The root of unity e^(2 pi i a) for rational a."""
    a = Fraction(a) % 1
    return zeta(a.denominator, a.numerator)


@dataclass(frozen=True)
class GaloisElement:
    """The automorphism zeta_n -> zeta_n^k of Q(zeta_n), with gcd(k, n) = 1."""

    conductor: int
    exponent: int

    def __post_init__(self):
        n, k = self.conductor, self.exponent
        if n < 2:
            raise InvalidConductor(f"automorphisms need conductor >= 2, got {n}")
        if not 1 <= k < n or math.gcd(k, n) != 1:
            raise InvalidAutomorphism(f"exponent {k} invalid at conductor {n}")


def galois_apply(z: CycNum, g: GaloisElement) -> CycNum:
    """Apply g to z; z's conductor must divide g's.

    >>> galois_apply(zeta(12), GaloisElement(12, 5)) == zeta(12, 5)
    True
    >>> galois_apply(rational(Fraction(3, 7)), GaloisElement(8, 3))
    CycNum(3/7)
    """
    n = z.conductor
    if g.conductor % n != 0:
        raise FieldMismatch(
            f"element at conductor {n} is outside Q(zeta_{g.conductor})")
    if n == 1:
        return z
    return CycNum._raw(n, list(_apply_exponent(n, z.coeffs, g.exponent % n)))


def galois_group(n: int) -> list[GaloisElement]:
    """All automorphisms of Q(zeta_n), i.e. (Z/n)^x; empty for n = 1."""
    if n == 1:
        return []
    return [GaloisElement(n, k) for k in range(1, n) if math.gcd(k, n) == 1]
