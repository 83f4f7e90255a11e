"""Exact Bernoulli and Euler numbers and polynomials.

Bernoulli numbers use the convention B_1 = -1/2 (generating function
t/(e^t - 1)). Everything here is exact: rationals come back as
``fractions.Fraction``, Euler numbers as ``int``. Internally the sums run on
gmpy2 integers over a common denominator, which is what keeps B_2000 cheap.

Two independent routes exist for each family so they can check each other:

* Bernoulli numbers come from the defining recurrence
  sum_{k=0}^{n} C(n+1, k) B_k = 0; the five quadratic recurrences in
  :func:`quad_recurrence` are only ever compared against it.
* Euler numbers come from inverting the cosh series (secant numbers); the
  Euler polynomials are built from their own constant terms E_n(0), which
  never touch the Euler numbers.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import comb, mpq, mpz

from .errors import DomainError

__all__ = [
    "Poly",
    "NumberCache",
    "SCHEMES",
    "bernoulli",
    "euler_number",
    "euler_number_from_poly",
    "euler_at_zero",
    "bernoulli_poly",
    "euler_poly",
    "euler_poly_at_one_identity",
    "bernoulli_quarter_identity",
    "quad_recurrence",
    "scheme_domain",
    "zeta_even_coeff",
]


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _check_index(n, name: str = "n", minimum: int = 0) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, type(mpz(0)))):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {n}")
    return n


def _dot(weights: Iterable[int], values: Sequence) -> mpq:
    """Exact sum of integer weights times rationals, over one common denominator."""
    pairs = [(mpz(w), v) for w, v in zip(weights, values) if w and v]
    if not pairs:
        return mpq(0)
    den = mpz(1)
    for _, v in pairs:
        den = gmpy2.lcm(den, v.denominator)
    num = sum(w * v.numerator * (den // v.denominator) for w, v in pairs)
    return mpq(num, den)


@dataclass(frozen=True)
class Poly:
    """Polynomial with exact rational coefficients; ``coefficients[i]`` multiplies x**i."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients] or [Fraction(0)]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.degree == 0 and self.coefficients[0] == 0

    def __call__(self, x):
        """Horner evaluation. Exact for int/Fraction arguments; for mpf
        arguments each coefficient is rounded once in the argument's context."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coefficients):
                acc = acc * x + c
            return acc
        ctx = getattr(x, "context", None)
        if ctx is None:
            raise TypeError(f"cannot evaluate Poly at {type(x).__name__}")
        acc = ctx.mpf(0)
        for c in reversed(self.coefficients):
            acc = acc * x + ctx.mpf(c.numerator) / c.denominator
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coefficients))[1:])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)


class NumberCache:
    """Grow-only tables of B_n, E_n and E_n(0).

    Reads are lock-free (list appends are atomic and entries are never
    rewritten); extension happens under a lock, so concurrent callers may
    wait but never see a partial table. Contents do not depend on the order
    in which indices are requested.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._bernoulli: list[mpq] = [mpq(1)]
        self._euler: list[mpz] = [mpz(1)]
        self._euler_zero: list[mpq] = [mpq(1)]
        self._fractions: dict[int, Fraction] = {}

    @property
    def bernoulli_high_water(self) -> int:
        return len(self._bernoulli) - 1

    @property
    def euler_high_water(self) -> int:
        return len(self._euler) - 1

    def bernoulli(self, n: int) -> mpq:
        table = self._bernoulli
        if n >= len(table):
            with self._lock:
                while len(table) <= n:
                    m = len(table)
                    # sum_{k<m} C(m+1, k) B_k + (m+1) B_m = 0
                    s = _dot((comb(m + 1, k) for k in range(m)), table)
                    table.append(-s / (m + 1))
        return table[n]

    def bernoulli_fraction(self, n: int) -> Fraction:
        f = self._fractions.get(n)
        if f is None:
            f = self._fractions.setdefault(n, _frac(self.bernoulli(n)))
        return f

    def euler(self, n: int) -> mpz:
        table = self._euler
        if n >= len(table):
            with self._lock:
                while len(table) <= n:
                    m = len(table)
                    # cosh * sech = 1: sum_{k<=m, m-k even} C(m, k) E_k = 0
                    s = sum(
                        (comb(m, k) * table[k] for k in range(m % 2, m, 2) if table[k]),
                        mpz(0),
                    )
                    table.append(-s)
        return table[n]

    def euler_zero(self, n: int) -> mpq:
        table = self._euler_zero
        if n >= len(table):
            with self._lock:
                while len(table) <= n:
                    m = len(table)
                    # 2 e^{xt}/(e^t+1) at x = 0: sum_{k<=m} C(m,k) E_k(0) + E_m(0) = 0 for m >= 1
                    s = _dot((comb(m, k) for k in range(m)), table)
                    table.append(-s / 2)
        return table[n]


_CACHE = NumberCache()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2)."""
    n = _check_index(n)
    return _CACHE.bernoulli_fraction(n)


def euler_number(n: int) -> int:
    """Exact Euler number E_n, the n-th Taylor coefficient (times n!) of sech."""
    n = _check_index(n)
    return int(_CACHE.euler(n))


def euler_at_zero(n: int) -> Fraction:
    """E_n(0), the constant term of the n-th Euler polynomial."""
    n = _check_index(n)
    return _frac(_CACHE.euler_zero(n))


def bernoulli_poly(n: int) -> Poly:
    """B_n(x) = sum_k C(n, k) B_k x^(n-k)."""
    n = _check_index(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = int(comb(n, k)) * bernoulli(k)
    return Poly(tuple(coeffs))


def euler_poly(n: int) -> Poly:
    """E_n(x) = sum_k C(n, k) E_k(0) x^(n-k) (Euler polynomials form an Appell sequence)."""
    n = _check_index(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = int(comb(n, k)) * _frac(_CACHE.euler_zero(k))
    return Poly(tuple(coeffs))


def euler_number_from_poly(n: int) -> int:
    """Second route to E_n: 2^n E_n(1/2), evaluated exactly.

    Raises ArithmeticError if the value is not an integer, which can only
    mean the polynomial table is wrong.
    """
    n = _check_index(n)
    # 2^n sum_k C(n,k) E_k(0) 2^{k-n} = sum_k C(n,k) E_k(0) 2^k
    v = _dot((comb(n, k) << k for k in range(n + 1)), [_CACHE.euler_zero(k) for k in range(n + 1)])
    if v.denominator != 1:
        raise ArithmeticError(f"2^{n} E_{n}(1/2) = {v} is not an integer")
    return int(v.numerator)


def euler_poly_at_one_identity(n: int) -> Fraction:
    """Closed form of E_n(1): 2 (2^(n+1) - 1) B_(n+1) / (n + 1), n >= 1."""
    n = _check_index(n, minimum=1)
    return 2 * (2 ** (n + 1) - 1) * bernoulli(n + 1) / (n + 1)


def bernoulli_quarter_identity(n: int) -> Fraction:
    """Closed form of B_(2n+1)(1/4): -(2n + 1) E_(2n) / 4^(2n+1), n >= 0."""
    n = _check_index(n)
    return Fraction(-(2 * n + 1) * euler_number(2 * n), 4 ** (2 * n + 1))


SCHEMES = ("euler", "euler_even", "gosper", "matiyasevich", "new")

_DOMAINS = {
    "euler": "n >= 1",
    "euler_even": "even n >= 4",
    "gosper": "n >= 0 with n not in {1, 2}",
    "matiyasevich": "n >= 4",
    "new": "n >= 4",
}


def scheme_domain(scheme: str, n: int) -> bool:
    """True when ``n`` is a valid input for ``scheme``."""
    if scheme == "euler":
        return n >= 1
    if scheme == "euler_even":
        return n >= 4 and n % 2 == 0
    if scheme == "gosper":
        return n >= 0 and n not in (1, 2)
    if scheme in ("matiyasevich", "new"):
        return n >= 4
    raise DomainError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")


def quad_recurrence(n: int, scheme: str) -> Fraction:
    """Bernoulli number obtained from a quadratic recurrence.

    Only Bernoulli numbers of index below the target are read, so the result
    is an independent check on :func:`bernoulli`.

    * ``euler``: sum_{k=0}^{n} C(n,k) B_k B_{n-k} = (1-n) B_n - n B_{n-1};
      the two B_n terms of the sum are moved to the left.
    * ``euler_even`` (even n): B_n = -1/(n+1) sum_{j=1}^{n/2-1} C(n,2j) B_{2j} B_{n-2j}.
    * ``gosper``: (1-n) B_n = sum_{k=0}^{n} (1-2^{1-k})(1-2^{k-n+1}) C(n,k) B_k B_{n-k};
      the k = 0 and k = n terms contain B_n, so the relation is solved for it,
      which divides by 3 - n - 2^{2-n}; that vanishes at n = 2.
    * ``matiyasevich``: B_n = 1/(n(n+1)) sum_{k=2}^{n-2} (n+2 - 2 C(n+2,k)) B_k B_{n-k}.
    * ``new``: B_n = 1/(2^n - 1) sum_{k=2}^{n-2} (1-2^k) C(n,k) B_k B_{n-k}.
    """
    n = _check_index(n, minimum=-(1 << 62))
    if scheme not in SCHEMES:
        raise DomainError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")
    if not scheme_domain(scheme, n):
        raise DomainError(f"scheme {scheme!r} is defined for {_DOMAINS[scheme]}, got n = {n}")

    B = _CACHE.bernoulli
    if scheme == "euler":
        inner = _products(n, range(1, n), lambda k: comb(n, k))
        value = -(inner + n * B(n - 1)) / (n + 1)
    elif scheme == "euler_even":
        inner = _products(n, range(2, n - 1, 2), lambda k: comb(n, k))
        value = -inner / (n + 1)
    elif scheme == "gosper":
        if n == 0:
            # single term k = 0: (1-2)(1-2) B_0^2 = 1
            return Fraction(1)
        # interior weights carry the powers of two; scale by 2^n to stay integral
        inner = _products(n, range(1, n), lambda k: ((1 << k) - 2) * ((1 << (n - k)) - 2) * comb(n, k))
        inner /= mpz(1) << n
        value = inner / (3 - n - mpq(4, mpz(1) << n))
    elif scheme == "matiyasevich":
        inner = _products(n, range(2, n - 1), lambda k: n + 2 - 2 * comb(n + 2, k))
        value = inner / (n * (n + 1))
    else:
        inner = _products(n, range(2, n - 1), lambda k: (1 - (mpz(1) << k)) * comb(n, k))
        value = inner / ((mpz(1) << n) - 1)
    return _frac(value)


def _products(n: int, ks: Iterable[int], weight) -> mpq:
    """sum_k weight(k) B_k B_{n-k} over ``ks`` (all indices < n), exactly."""
    B = _CACHE.bernoulli
    B(n - 1)
    terms = []
    den = mpz(1)
    for k in ks:
        a, b = B(k), B(n - k)
        if not a or not b:
            continue
        terms.append((weight(k), a, b))
        den = gmpy2.lcm(den, a.denominator * b.denominator)
    if not terms:
        return mpq(0)
    num = sum(
        mpz(w) * a.numerator * b.numerator * (den // (a.denominator * b.denominator)) for w, a, b in terms
    )
    return mpq(num, den)


def zeta_even_coeff(j: int) -> Fraction:
    """Rational c_j with zeta(2j) = c_j pi^(2j), i.e. (-1)^(j-1) 2^(2j-1) B_2j / (2j)!."""
    j = _check_index(j, "j", minimum=1)
    sign = 1 if j % 2 else -1
    return sign * 2 ** (2 * j - 1) * bernoulli(2 * j) / int(gmpy2.fac(2 * j))
