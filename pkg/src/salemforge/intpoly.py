"""Primitive integer polynomials and certified complex root isolation.

`IntPolynomial` is the universal carrier for minimal and characteristic
polynomials.  Values are always stored in primitive form (coprime integer
coefficients, positive leading coefficient), matching the convention that a
minimal polynomial over the integers need not be monic but has coprime
coefficients.

Factorization and resultants are delegated to sympy's integer polynomial
kernel (Zassenhaus factorization with Hensel lifting, subresultant PRS);
root isolation is implemented in `_roots` on top of exact disk arithmetic
with numeric proposals certified by Pellet's theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import sympy

from . import _config
from .errors import (
    DegreeCapExceeded,
    NotIrreducibleError,
    PolyParseError,
    ZeroConstantTermError,
    ZeroPolynomialError,
)
from .intervals import Disk

_X = sympy.Symbol("x")
_Y = sympy.Symbol("y")


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending, primitive with positive
    leading coefficient.  The zero polynomial has an empty coefficient tuple
    and degree -1."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if coeffs:
            content = 0
            for c in coeffs:
                content = gcd(content, c)
            if coeffs[-1] < 0:
                content = -content
            if content != 1:
                coeffs = tuple(c // content for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_coeffs(coeffs) -> "IntPolynomial":
        return IntPolynomial(tuple(coeffs))

    @staticmethod
    def x_minus(c: int) -> "IntPolynomial":
        return IntPolynomial((-c, 1))

    # -- arithmetic used internally ----------------------------------------

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_disk(self, z: Disk) -> Disk:
        acc = Disk.exact(0)
        for c in reversed(self.coeffs):
            acc = acc * z + Disk.exact(c)
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def reverse(self) -> "IntPolynomial":
        """Coefficient reversal; roots map to their inverses (constant term
        must be nonzero for that reading)."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def is_self_reciprocal(self) -> bool:
        """True when the reversed polynomial equals this one (after the
        primitive normalization, which absorbs an overall sign)."""
        return self.reverse() == self

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)

    # -- sympy bridge -------------------------------------------------------

    def to_sympy(self, gen=_X) -> sympy.Poly:
        if self.is_zero:
            return sympy.Poly(0, gen, domain=sympy.ZZ)
        return sympy.Poly(dict(enumerate(self.coeffs)), gen, domain=sympy.ZZ)

    @staticmethod
    def from_sympy(poly: sympy.Poly) -> "IntPolynomial":
        if poly.is_zero:
            return IntPolynomial(())
        coeffs = [0] * (poly.degree() + 1)
        for (exp,), coeff in poly.terms():
            coeffs[exp] = int(coeff)
        return IntPolynomial(tuple(coeffs))


@dataclass(frozen=True)
class RootBox:
    """Closed disk certified to contain exactly one root (of the squarefree
    part) of its associated polynomial."""

    center_re: Fraction
    center_im: Fraction
    radius: Fraction

    def disk(self) -> Disk:
        return Disk(self.center_re, self.center_im, self.radius)

    @staticmethod
    def from_disk(d: Disk) -> "RootBox":
        return RootBox(d.re, d.im, d.rad)

    def __repr__(self):
        return f"RootBox({self.center_re}, {self.center_im}; {self.radius})"


# ---------------------------------------------------------------------------
# Parsing.
#
# Grammar: poly = ['+'|'-'] term (('+'|'-') term)*
#          term = [coeff]['x'['^'exp]]
# Whitespace is permitted between tokens but not inside numbers.

_MAX_EXPONENT = 1 << 20


def parse_poly(text: str) -> IntPolynomial:
    """Parse polynomial text into its primitive normalization."""
    i, n = 0, len(text)
    coeffs: dict[int, int] = {}

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int(what: str) -> int:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise PolyParseError(f"expected {what}", start)
        if i < n and text[i] == ".":
            raise PolyParseError("non-integer coefficient", start)
        return int(text[start:i])

    skip_ws()
    if i >= n:
        raise PolyParseError("empty polynomial", 0)
    sign = 1
    if text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i += 1
        skip_ws()

    while True:
        term_start = i
        coeff = None
        if i < n and text[i].isdigit():
            coeff = read_int("integer coefficient")
        skip_ws()
        exp = 0
        if i < n and text[i] in "xX":
            i += 1
            exp = 1
            if i < n and text[i] == "^":
                i += 1
                exp = read_int("exponent")
                if exp > _MAX_EXPONENT:
                    raise PolyParseError("exponent too large", term_start)
            elif i < n and text[i].isdigit():
                raise PolyParseError("missing '^' before exponent", i)
        if coeff is None:
            if exp == 0:
                raise PolyParseError("expected term", term_start)
            coeff = 1
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        skip_ws()
        if i >= n:
            break
        if text[i] not in "+-":
            raise PolyParseError("expected '+' or '-'", i)
        sign = -1 if text[i] == "-" else 1
        i += 1
        skip_ws()
        if i >= n:
            raise PolyParseError("dangling sign", i)

    if not coeffs:
        return IntPolynomial(())
    top = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(k, 0) for k in range(top + 1)))


# ---------------------------------------------------------------------------
# Resultants and composed operations.


def resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Exact resultant Res(p, q) of two nonzero integer polynomials."""
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    if p.degree == 0:
        return p.coeffs[0] ** q.degree
    if q.degree == 0:
        return q.coeffs[0] ** p.degree
    return int(p.to_sympy().resultant(q.to_sympy()))


def _bipoly(coeffs, x_of_y):
    """Build a sympy expression sum coeffs[j] * x**j * y**(...) per mapping."""
    return sum(term for term in x_of_y(coeffs))


def composed_product(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Polynomial of degree deg p * deg q whose roots are all pairwise
    products of roots of p and q, via Res_y(p(y), y^deg(q) q(x/y))."""
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("composed product of the zero polynomial")
    if p.constant == 0 or q.constant == 0:
        raise ZeroConstantTermError(
            "composed product requires nonzero constant terms"
        )
    if p.degree == 0 or q.degree == 0:
        return IntPolynomial((1,))
    m = q.degree
    f = sympy.Poly(dict(((j, 0), c) for j, c in enumerate(p.coeffs)), _Y, _X, domain=sympy.ZZ)
    g = sympy.Poly(
        dict(((m - j, j), c) for j, c in enumerate(q.coeffs)), _Y, _X, domain=sympy.ZZ
    )
    res = f.resultant(g)
    out = IntPolynomial.from_sympy(sympy.Poly(res, _X, domain=sympy.ZZ))
    assert out.degree == p.degree * q.degree
    return out


def composed_sum(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Polynomial with roots all pairwise sums, via Res_y(p(y), q(x-y))."""
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("composed sum of the zero polynomial")
    if p.degree == 0 or q.degree == 0:
        return IntPolynomial((1,))
    f = sympy.Poly(dict(((j, 0), c) for j, c in enumerate(p.coeffs)), _Y, _X, domain=sympy.ZZ)
    shifted = q.to_sympy(_X - _Y)  # q(x - y)
    g = sympy.Poly(shifted.as_expr(), _Y, _X, domain=sympy.ZZ)
    res = f.resultant(g)
    out = IntPolynomial.from_sympy(sympy.Poly(res, _X, domain=sympy.ZZ))
    assert out.degree == p.degree * q.degree
    return out


def scale_roots(p: IntPolynomial, s: int) -> IntPolynomial:
    """Polynomial whose roots are s * (roots of p)."""
    if p.is_zero:
        raise ZeroPolynomialError("scaling roots of the zero polynomial")
    d = p.degree
    return IntPolynomial(tuple(c * s ** (d - j) for j, c in enumerate(p.coeffs)))


def composed_power(p: IntPolynomial, n: int) -> IntPolynomial:
    """Polynomial whose roots are the n-th powers of the roots of p
    (n >= 1), via Res_y(p(y), x - y^n)."""
    if p.is_zero:
        raise ZeroPolynomialError("composed power of the zero polynomial")
    if n < 1:
        raise ValueError("composed_power requires n >= 1")
    if n == 1 or p.degree == 0:
        return p
    f = sympy.Poly(dict(((j, 0), c) for j, c in enumerate(p.coeffs)), _Y, _X, domain=sympy.ZZ)
    g = sympy.Poly({(n, 0): -1, (0, 1): 1}, _Y, _X, domain=sympy.ZZ)  # x - y^n
    res = f.resultant(g)
    out = IntPolynomial.from_sympy(sympy.Poly(res, _X, domain=sympy.ZZ))
    assert out.degree == p.degree
    return out


# ---------------------------------------------------------------------------
# Factorization.


def factor_over_integers(
    p: IntPolynomial, cap: int | None = None
) -> list[tuple[IntPolynomial, int]]:
    """Complete factorization into irreducible primitive factors over Z.

    The product of the factors with multiplicities equals p up to sign.
    Factors are returned in a deterministic order (degree, then coefficient
    tuple).
    """
    if p.is_zero:
        raise ZeroPolynomialError("factorization of the zero polynomial")
    limit = cap if cap is not None else _config.factor_cap()
    if p.degree > limit:
        raise DegreeCapExceeded(
            f"degree {p.degree} exceeds factorization cap {limit}"
        )
    if p.degree == 0:
        return []
    _, factors = p.to_sympy().factor_list()
    out = [
        (IntPolynomial.from_sympy(f), int(mult))
        for f, mult in factors
        if f.degree() > 0
    ]
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def is_irreducible(p: IntPolynomial) -> bool:
    if p.is_zero or p.degree == 0:
        return False
    factors = factor_over_integers(p, cap=max(_config.internal_factor_cap(), p.degree))
    return len(factors) == 1 and factors[0][1] == 1


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """Primitive polynomial with the same distinct roots, each simple."""
    if p.is_zero:
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return IntPolynomial((1,))
    sp = p.to_sympy()
    g = sp.gcd(sp.diff())
    if g.degree() == 0:
        return p
    quo = sp.div(g)[0]
    return IntPolynomial.from_sympy(quo)


# ---------------------------------------------------------------------------
# Cyclotomic polynomials.


def cyclotomic_polynomial(n: int) -> IntPolynomial:
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    return IntPolynomial.from_sympy(
        sympy.Poly(sympy.cyclotomic_poly(n, _X), _X, domain=sympy.ZZ)
    )


def is_cyclotomic(p: IntPolynomial) -> int | None:
    """Return n with p = Phi_n, or None.

    Decision procedure: enumerate n with Euler-phi(n) = deg p (bounded by
    2*deg^2 + 2 since phi(n) >= sqrt(n/2)) in ascending order and test
    divisibility of x^n - 1; the first hit is exact.
    """
    if p.is_zero or not p.is_monic:
        raise NotIrreducibleError("cyclotomic test requires a monic polynomial")
    if not is_irreducible(p):
        raise NotIrreducibleError("cyclotomic test requires an irreducible polynomial")
    d = p.degree
    if p.coeffs == (0, 1):  # p = x
        return None
    sp = p.to_sympy()
    for n in range(1, 2 * d * d + 3):
        if sympy.totient(n) != d:
            continue
        xn_minus_1 = sympy.Poly({(n,): 1, (0,): -1}, _X, domain=sympy.ZZ)
        if xn_minus_1.rem(sp).is_zero:
            return n
    return None


# ---------------------------------------------------------------------------
# Root isolation (front end; the machinery lives in _roots).


def isolate_roots(p: IntPolynomial, precision) -> list[RootBox]:
    """Pairwise-disjoint certified disks, one per distinct root of p, each of
    radius <= precision, ordered by (real part, imaginary part) of the root."""
    from . import _roots

    if p.is_zero:
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if p.degree == 0:
        return []
    system = _roots.root_system(p)
    system.refine_all(precision)
    return [RootBox.from_disk(d) for d in system.published_disks()]
