"""Exact univariate polynomials over the integers.

A polynomial is stored as a tuple of Python ints, lowest degree first, with
trailing zeros stripped.  The zero polynomial is the empty tuple, so equality
and hashing are structural.

Besides ring arithmetic this module holds the structural operators applied to
the generating polynomials elsewhere in the package: r-sections, the E_r
operator, palindromicity, gamma expansion and symmetric decomposition.
"""
from __future__ import annotations

import json
from math import comb, gcd
from typing import Iterable, Sequence

from eulerpoly.errors import DomainError

NEG_INF = float("-inf")


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """Immutable polynomial in ``z`` with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _strip(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # constructors

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        if k < 0:
            raise DomainError("monomial exponent must be nonnegative")
        return cls([0] * k + [c])

    @classmethod
    def geometric(cls, lo: int, hi: int) -> "IntPoly":
        """z^lo + z^(lo+1) + ... + z^hi (zero when hi < lo)."""
        if hi < lo:
            return ZERO
        return cls([0] * lo + [1] * (hi - lo + 1))

    # basic properties

    @property
    def degree(self):
        """Degree as an int, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    # arithmetic

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise DomainError("negative polynomial power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation at an int, Fraction, or any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "IntPoly":
        """Multiply by z^k."""
        if not self.coeffs:
            return ZERO
        return IntPoly([0] * k + list(self.coeffs))

    def inflate(self, r: int) -> "IntPoly":
        """Return f(z^r)."""
        if r < 1:
            raise DomainError("inflation factor must be positive")
        out = [0] * (r * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[r * i] = c
        return IntPoly(out)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def reverse(self, n: int) -> "IntPoly":
        """z^n f(1/z); requires deg f <= n."""
        if self.coeffs and len(self.coeffs) - 1 > n:
            raise DomainError(f"degree {self.degree} exceeds reversal length {n}")
        padded = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return IntPoly(reversed(padded))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # display / serialization

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "z"
            else:
                mono = f"z^{i}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        return {"var": "z", "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc) -> "IntPoly":
        if isinstance(doc, str):
            doc = json.loads(doc)
        if doc.get("var", "z") != "z":
            raise DomainError(f"unsupported variable {doc.get('var')!r}")
        return cls(int(c) for c in doc["coeffs"])


ZERO = IntPoly()
ONE = IntPoly((1,))
Z = IntPoly((0, 1))
ONE_PLUS_Z = IntPoly((1, 1))


def poly_arith(a: IntPoly, b: IntPoly, kind: str) -> IntPoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise DomainError(f"unknown arithmetic kind {kind!r}")


def poly_sum(polys: Iterable[IntPoly]) -> IntPoly:
    acc = [0]
    for p in polys:
        if len(p.coeffs) > len(acc):
            acc.extend([0] * (len(p.coeffs) - len(acc)))
        for i, c in enumerate(p.coeffs):
            acc[i] += c
    return IntPoly(acc)


def binomial_powers(n: int) -> list[IntPoly]:
    """[(1+z)^0, ..., (1+z)^n], built row by row from Pascal's rule."""
    rows = [ONE]
    row = [1]
    for k in range(1, n + 1):
        row = [1] + [row[i] + row[i + 1] for i in range(k - 1)] + [1]
        rows.append(IntPoly(row))
    return rows


def from_counts(counts: dict[tuple[int, int], int]) -> IntPoly:
    """Sum of ``count * (1+z)^col * z^asc`` over a table keyed by (col, asc)."""
    if not counts:
        return ZERO
    top = max(col for col, _ in counts)
    powers = binomial_powers(top)
    return poly_sum(powers[col].shift(asc) * cnt for (col, asc), cnt in counts.items())


# structural operators


def r_sections(f: IntPoly, r: int) -> list[IntPoly]:
    """The unique (f0, ..., f_{r-1}) with f(z) = sum_j z^j f_j(z^r)."""
    if r < 1:
        raise DomainError("r must be a positive integer")
    return [IntPoly(f.coeffs[j::r]) for j in range(r)]


def recombine_sections(sections: Sequence[IntPoly]) -> IntPoly:
    r = len(sections)
    if r < 1:
        raise DomainError("need at least one section")
    return poly_sum(sec.inflate(r).shift(j) for j, sec in enumerate(sections))


def er_apply(f: IntPoly, r: int) -> IntPoly:
    """E_r: keep exponents divisible by r and divide them by r."""
    if r < 1:
        raise DomainError("r must be a positive integer")
    return IntPoly(f.coeffs[::r])


def is_palindromic(f: IntPoly, n: int) -> bool:
    """True iff coeff(z^i) == coeff(z^(n-i)) for 0 <= i <= n.

    Coefficients beyond ``n`` must vanish, otherwise the symmetry fails.
    """
    if f.coeffs and len(f.coeffs) - 1 > n:
        return False
    return all(f[i] == f[n - i] for i in range(n + 1))


def gamma_expand(f: IntPoly, n: int) -> list[int]:
    """Coordinates of ``f`` in the basis z^i (1+z)^(n-2i), i = 0..floor(n/2).

    Entries may be negative; gamma-positivity is left to the caller.
    """
    if n < 0:
        raise DomainError("center parameter must be nonnegative")
    if not is_palindromic(f, n):
        raise DomainError(f"{f} is not palindromic with center {n}/2")
    powers = binomial_powers(n)
    rest = f
    gammas = []
    for i in range(n // 2 + 1):
        g = rest[i]
        gammas.append(g)
        if g:
            rest = rest - powers[n - 2 * i].shift(i) * g
    if rest:
        raise DomainError(f"gamma expansion left remainder {rest}")
    return gammas


def gamma_recombine(gammas: Sequence[int], n: int) -> IntPoly:
    powers = binomial_powers(n)
    return poly_sum(powers[n - 2 * i].shift(i) * g for i, g in enumerate(gammas))


def symmetric_decompose(h: IntPoly, n: int) -> tuple[IntPoly, IntPoly]:
    """Split ``h = a + z*b`` with a palindromic about n/2 and b about (n-1)/2.

    Uses z^n h(1/z) - h(z) = (1 - z) b(z); the division by (1 - z) is the
    running-sum triangular solve b_i = b_{i-1} + d_i.
    """
    if n < 0:
        raise DomainError("center parameter must be nonnegative")
    if h.coeffs and h.degree > n:
        raise DomainError(f"deg h = {h.degree} exceeds n = {n}")
    diff = h.reverse(n) - h
    b, run = [], 0
    for i in range(n + 1):
        run += diff[i]
        b.append(run)
    if b[-1] != 0:
        raise DomainError("no symmetric decomposition with the requested centers")
    b_poly = IntPoly(b)
    a_poly = h - b_poly.shift(1)
    if not (is_palindromic(a_poly, n) and is_palindromic(b_poly, n - 1)):
        raise DomainError("decomposition failed the palindromicity checks")
    return a_poly, b_poly


def binomial_transform(polys: Sequence[IntPoly], n: int) -> IntPoly:
    """sum_{k=0}^{n} C(n, k) (1+z)^(n-k) polys[k]."""
    powers = binomial_powers(n)
    return poly_sum(powers[n - k] * polys[k] * comb(n, k) for k in range(n + 1))
