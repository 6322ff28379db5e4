"""Homogeneous forms with exact rational or prime-field coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from hilbgeom.errors import DomainError, InputError

Exponent = tuple[int, ...]


def _norm(c, modulus):
    if modulus is None:
        return Fraction(c)
    if isinstance(c, Fraction):
        return c.numerator * pow(c.denominator, -1, modulus) % modulus
    return int(c) % modulus


@dataclass(frozen=True, eq=False)
class Form:
    """A homogeneous polynomial in ``n`` variables.

    ``terms`` maps exponent vectors (all of total degree ``degree``) to
    nonzero coefficients: :class:`~fractions.Fraction` when ``modulus`` is
    ``None``, otherwise integers in ``[0, modulus)``.
    """

    n: int
    degree: int
    terms: Mapping[Exponent, object] = field(default_factory=dict)
    modulus: Optional[int] = None

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(a) for a in e)
            if len(e) != self.n:
                raise DomainError(f"exponent {e} has length {len(e)}, expected {self.n}")
            if sum(e) != self.degree or any(a < 0 for a in e):
                raise DomainError(f"exponent {e} does not have degree {self.degree}")
            c = _norm(c, self.modulus)
            if c:
                clean[e] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, n: int, c=1, modulus: Optional[int] = None) -> "Form":
        return cls(n, 0, {(0,) * n: c}, modulus)

    @classmethod
    def monomial(cls, e: Exponent, c=1, modulus: Optional[int] = None) -> "Form":
        return cls(len(e), sum(e), {tuple(e): c}, modulus)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.n == other.n
            and self.modulus == other.modulus
            and (self.is_zero() and other.is_zero() or self.degree == other.degree)
            and self.terms == other.terms
        )

    def __mul__(self, other: "Form") -> "Form":
        if isinstance(other, (int, Fraction)):
            return Form(self.n, self.degree, {e: c * other for e, c in self.terms.items()}, self.modulus)
        self._compatible(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        if self.modulus is not None:
            out = {e: c % self.modulus for e, c in out.items()}
        return Form(self.n, self.degree + other.degree, out, self.modulus)

    __rmul__ = __mul__

    def __add__(self, other: "Form") -> "Form":
        self._compatible(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise DomainError("cannot add forms of different degrees")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Form(self.n, self.degree, out, self.modulus)

    def __neg__(self) -> "Form":
        return self * -1

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def _compatible(self, other: "Form"):
        if self.n != other.n or self.modulus != other.modulus:
            raise DomainError("forms live in different rings")

    def reduce(self, p: int) -> "Form":
        """Image over the prime field F_p (denominators must be units mod p)."""
        for c in self.terms.values():
            if isinstance(c, Fraction) and c.denominator % p == 0:
                raise DomainError(f"coefficient {c} has a denominator divisible by {p}")
        return Form(self.n, self.degree, dict(self.terms), p)

    def mod_terms(self, p: int) -> dict[Exponent, int]:
        if self.modulus == p:
            return dict(self.terms)
        if self.modulus is not None:
            raise DomainError(f"form is defined over F_{self.modulus}, not F_{p}")
        return dict(self.reduce(p).terms)

    def normalized(self) -> "Form":
        """Scale so the lex-leading coefficient is 1."""
        if self.is_zero():
            return self
        lead = self.terms[max(self.terms)]
        if self.modulus is None:
            return self * (1 / Fraction(lead))
        return self * pow(lead, -1, self.modulus)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        names = variable_names(self.n)
        out = ""
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if self.modulus is not None and c > self.modulus // 2:
                c -= self.modulus  # symmetric residue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            mono = "*".join((v if a == 1 else f"{v}^{a}") for v, a in zip(names, e) if a)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if not out:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "terms": [{"e": list(e), "c": str(self.terms[e])} for e in sorted(self.terms, reverse=True)],
        }
        if self.modulus is not None:
            out["modulus"] = str(self.modulus)
        return out

    @classmethod
    def from_json(cls, obj) -> "Form":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            n = int(obj["n"])
            raw = [(tuple(int(a) for a in t["e"]), Fraction(str(t["c"]))) for t in obj["terms"]]
            modulus = int(obj["modulus"]) if "modulus" in obj else None
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed form: {exc}") from None
        if not raw:
            raise InputError("a form needs at least one term")
        degree = sum(raw[0][0])
        terms: dict = {}
        for e, c in raw:
            terms[e] = terms.get(e, 0) + c
        return cls(n, degree, terms, modulus)

    @classmethod
    def parse(cls, text: str, n: int) -> "Form":
        """Read a form such as ``"x^4*t - y^4*z"`` in the variables of :func:`variable_names`."""
        import sympy

        names = variable_names(n)
        syms = sympy.symbols(names)
        try:
            expr = sympy.sympify(text.replace("^", "**"), locals=dict(zip(names, syms)))
            poly = sympy.Poly(expr, *syms, domain="QQ")
        except (sympy.SympifyError, sympy.PolynomialError, TypeError, SyntaxError) as exc:
            raise InputError(f"cannot read form {text!r}: {exc}") from None
        if poly.is_zero:
            raise InputError(f"form {text!r} is zero")
        terms = {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in poly.terms()}
        degrees = {sum(e) for e in terms}
        if len(degrees) != 1:
            raise InputError(f"form {text!r} is not homogeneous")
        return cls(n, degrees.pop(), terms)


def variable_names(n: int) -> list[str]:
    if n <= 4:
        return ["x", "y", "z", "t"][:n]
    return [f"x{i}" for i in range(1, n + 1)]


# Dict-based arithmetic over F_p used by the rank engine's inner layers.


def poly_mul(a: Mapping[Exponent, int], b: Mapping[Exponent, int], p: int) -> dict[Exponent, int]:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = (out.get(e, 0) + c1 * c2) % p
    return {e: c for e, c in out.items() if c}


def shift(a: Mapping[Exponent, int], m: Exponent) -> dict[Exponent, int]:
    """Multiply by the monomial x^m."""
    return {tuple(x + y for x, y in zip(e, m)): c for e, c in a.items()}


def substitute(
    a: Mapping[Exponent, int], images: list[dict[Exponent, int]], m: int, p: int, cache: dict
) -> dict[Exponent, int]:
    """Replace x_i by the linear form ``images[i]`` in ``m`` variables.

    ``cache`` memoizes images of monomials across calls with the same map.
    """
    out: dict = {}
    for e, c in a.items():
        img = _monomial_image(e, images, m, p, cache)
        for f, d in img.items():
            out[f] = (out.get(f, 0) + c * d) % p
    return {e: c for e, c in out.items() if c}


def _monomial_image(e, images, m, p, cache):
    if e in cache:
        return cache[e]
    if sum(e) == 0:
        res = {(0,) * m: 1}
    else:
        i = max(j for j, a in enumerate(e) if a)
        rest = list(e)
        rest[i] -= 1
        res = poly_mul(_monomial_image(tuple(rest), images, m, p, cache), images[i], p)
    cache[e] = res
    return res
