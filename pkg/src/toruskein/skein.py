"""Elements of the Kauffman bracket skein module of the torus.

Two bases are supported.  In the standard basis, the class (a, b) is the
multicurve of gcd(a, b) parallel copies of the primitive (a/g, b/g) curve and
the empty curve is the unit.  In the Chebyshev basis, the generator indexed by
(a, b) is T_g evaluated at the primitive class (g = gcd), where powers of a
curve are parallel copies; the empty curve again plays the role of 1.

Multiplication of Chebyshev generators is the product-to-sum formula of
Frohman and Gelca,

    (a,b)_T * (c,d)_T = A^det (a-c, b-d)_T + A^-det (a+c, b+d)_T,

with det = a*d - b*c.  Output indices are canonicalized into the half-plane
(both orientations of a multicurve give the same unoriented class) and the
degenerate index (0, 0)_T stands for 2 * empty.  Standard-basis products are
computed by converting to the Chebyshev basis and back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from . import chebyshev
from .laurent import LaurentPoly
from .torus_curves import EMPTY, UnorientedClass, Vec2, canonicalize, det2


class Basis(str, Enum):
    STANDARD = "standard"
    CHEBYSHEV = "chebyshev"


class BasisMismatchError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class SkeinElement:
    """A finite R-linear combination of curve classes, tagged with its basis."""

    basis: Basis
    _terms: tuple[tuple[UnorientedClass, LaurentPoly], ...] = field(default=())

    @classmethod
    def make(
        cls,
        basis: Basis,
        terms: Mapping[UnorientedClass, LaurentPoly] | Iterable[tuple[UnorientedClass, LaurentPoly]],
    ) -> "SkeinElement":
        acc: dict[UnorientedClass, LaurentPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            c = acc.get(key, LaurentPoly.zero()) + coeff
            if c.is_zero:
                acc.pop(key, None)
            else:
                acc[key] = c
        ordered = tuple(sorted(acc.items(), key=lambda kv: kv[0].sort_key()))
        return cls(Basis(basis), ordered)

    @classmethod
    def zero(cls, basis: Basis) -> "SkeinElement":
        return cls(Basis(basis), ())

    @classmethod
    def unit(cls, basis: Basis) -> "SkeinElement":
        return cls.make(basis, {EMPTY: LaurentPoly.one()})

    @classmethod
    def generator(cls, key: UnorientedClass, basis: Basis) -> "SkeinElement":
        return cls.make(basis, {key: LaurentPoly.one()})

    # ----- term access -----

    def terms(self) -> tuple[tuple[UnorientedClass, LaurentPoly], ...]:
        return self._terms

    def coefficient(self, key: UnorientedClass) -> LaurentPoly:
        for k, c in self._terms:
            if k == key:
                return c
        return LaurentPoly.zero()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> tuple[UnorientedClass, ...]:
        return tuple(k for k, _ in self._terms)

    # ----- module structure -----

    def _require_same_basis(self, other: "SkeinElement") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError(f"cannot combine {self.basis.value} with {other.basis.value}")

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        self._require_same_basis(other)
        return SkeinElement.make(self.basis, list(self._terms) + list(other._terms))

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + other.scaled(-1)

    def scaled(self, factor: LaurentPoly | int) -> "SkeinElement":
        return SkeinElement.make(self.basis, [(k, c * factor) for k, c in self._terms])

    def map_coefficients(self, fn) -> "SkeinElement":
        return SkeinElement.make(self.basis, [(k, fn(c)) for k, c in self._terms])

    # ----- basis change -----

    def to_chebyshev(self) -> "SkeinElement":
        """Rewrite a standard-basis element over the Chebyshev generators."""
        if self.basis != Basis.STANDARD:
            raise BasisMismatchError("to_chebyshev expects a standard-basis element")
        out: list[tuple[UnorientedClass, LaurentPoly]] = []
        for key, coeff in self._terms:
            if key.is_empty:
                out.append((key, coeff))
                continue
            n, prim = key.split()
            for k, c in chebyshev.power_to_chebyshev(n).items():
                tkey = EMPTY if k == 0 else UnorientedClass((k * prim[0], k * prim[1]))
                out.append((tkey, coeff * c))
        return SkeinElement.make(Basis.CHEBYSHEV, out)

    def to_standard(self) -> "SkeinElement":
        """Expand Chebyshev generators into standard multicurve classes."""
        if self.basis != Basis.CHEBYSHEV:
            raise BasisMismatchError("to_standard expects a Chebyshev-basis element")
        out: list[tuple[UnorientedClass, LaurentPoly]] = []
        for key, coeff in self._terms:
            if key.is_empty:
                out.append((key, coeff))
                continue
            n, prim = key.split()
            for power, c in enumerate(chebyshev.chebyshev_t(n)):
                if not c:
                    continue
                skey = EMPTY if power == 0 else UnorientedClass((power * prim[0], power * prim[1]))
                out.append((skey, coeff * c))
        return SkeinElement.make(Basis.STANDARD, out)

    # ----- multiplication -----

    def __mul__(self, other: "SkeinElement") -> "SkeinElement":
        self._require_same_basis(other)
        if self.basis == Basis.CHEBYSHEV:
            return _mul_chebyshev(self, other)
        return _mul_chebyshev(self.to_chebyshev(), other.to_chebyshev()).to_standard()

    # ----- text and JSON forms -----

    def __str__(self) -> str:
        return format_terms(self._terms, suffix="_T" if self.basis == Basis.CHEBYSHEV else "")

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "terms": [{"class": k.to_json(), "coeff": c.to_json()} for k, c in self._terms],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SkeinElement":
        basis = Basis(data["basis"])
        terms = [
            (UnorientedClass.from_json(t["class"]), LaurentPoly.from_json(t["coeff"]))
            for t in data["terms"]
        ]
        return cls.make(basis, terms)


def chebyshev_of(vec: Vec2) -> SkeinElement:
    """Standard-basis expansion of the Chebyshev generator indexed by ``vec``.

    (0, 0) is allowed and expands to T_0 at the degenerate class, i.e. 2 * empty.
    """
    if vec == (0, 0):
        return SkeinElement.unit(Basis.STANDARD).scaled(2)
    key = canonicalize(vec)[0]
    return SkeinElement.generator(key, Basis.CHEBYSHEV).to_standard()


def _generator_product(u: Vec2, v: Vec2) -> list[tuple[UnorientedClass, LaurentPoly]]:
    d = det2(u, v)
    out: list[tuple[UnorientedClass, LaurentPoly]] = []
    for sign, w in ((1, (u[0] - v[0], u[1] - v[1])), (-1, (u[0] + v[0], u[1] + v[1]))):
        coeff = LaurentPoly.monomial(1, sign * d)
        if w == (0, 0):
            out.append((EMPTY, coeff * 2))  # (0,0)_T stands for 2 * empty
        else:
            out.append((canonicalize(w)[0], coeff))
    return out


def _mul_chebyshev(x: SkeinElement, y: SkeinElement) -> SkeinElement:
    out: list[tuple[UnorientedClass, LaurentPoly]] = []
    for xkey, xc in x.terms():
        for ykey, yc in y.terms():
            c = xc * yc
            if xkey.is_empty and ykey.is_empty:
                out.append((EMPTY, c))
            elif xkey.is_empty:
                out.append((ykey, c))
            elif ykey.is_empty:
                out.append((xkey, c))
            else:
                for key, factor in _generator_product(xkey.vec, ykey.vec):
                    out.append((key, c * factor))
    return SkeinElement.make(Basis.CHEBYSHEV, out)


def format_terms(terms, suffix: str = "", key_str=str) -> str:
    """Shared pretty-printer: ``coeff key`` terms joined by signs.

    Single-term coefficients print bare (``A^-1 (1,1)``), multi-term ones are
    parenthesized; unit coefficients are dropped; the empty/unit key prints as
    a constant term.
    """
    if not terms:
        return "0"
    parts = []
    for key, coeff in terms:
        is_unit_key = getattr(key, "is_empty", False) or key == (0, 0)
        name = "" if is_unit_key else key_str(key) + suffix
        items = coeff.terms()
        if len(items) == 1:
            exp, c = items[0]
            sign = "-" if c < 0 else "+"
            mono = "" if exp == 0 else ("A" if exp == 1 else f"A^{exp}")
            body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)}{mono}")
            if name:
                body = name if body == "1" else f"{body} {name}"
            parts.append((sign, body))
        else:
            body = f"({coeff})"
            if name:
                body = f"{body} {name}"
            parts.append(("+", body))
    sign, body = parts[0]
    out = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
