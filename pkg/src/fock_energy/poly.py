"""Exact sparse polynomials: QPoly in one variable q, GradedPoly in named
Laurent variables with QPoly coefficients."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence


class PolyError(ValueError):
    pass


class QPoly:
    """Integer Laurent polynomial in q, stored as {power: coefficient}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            self._c: dict[int, int] = {}
        elif isinstance(coeffs, int):
            self._c = {0: coeffs} if coeffs else {}
        else:
            self._c = {int(k): int(v) for k, v in coeffs.items() if v}

    @classmethod
    def q(cls, power: int = 1) -> "QPoly":
        return cls({power: 1})

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> "QPoly":
        return cls({i: c for i, c in enumerate(coeffs)})

    def items(self):
        return sorted(self._c.items())

    def coeff(self, power: int) -> int:
        return self._c.get(power, 0)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            raise PolyError("degree of zero")
        return max(self._c)

    def low_degree(self) -> int:
        if not self._c:
            raise PolyError("degree of zero")
        return min(self._c)

    def to_list(self) -> list[int]:
        """Coefficients of q^0 .. q^deg (needs a genuine polynomial)."""
        if not self._c:
            return []
        if self.low_degree() < 0:
            raise PolyError("negative powers present")
        return [self.coeff(i) for i in range(self.degree() + 1)]

    def __call__(self, q):
        return sum(c * q**k for k, c in self._c.items())

    @staticmethod
    def _lift(x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return QPoly(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division in Z[q, 1/q]; the remainder is zero whenever the quotient exists."""
        if other.is_zero():
            raise ZeroDivisionError("QPoly division by zero")
        unit = other.low_degree()
        if unit:
            # q is invertible: divide by other / q^unit and move q^-unit into the quotient
            quot, rem = self.divmod(QPoly({k - unit: c for k, c in other._c.items()}))
            return QPoly({k - unit: c for k, c in quot._c.items()}), rem
        low = min(self._c, default=0)
        if low < 0:
            # divide q^-low * self, then undo the shift on both parts
            quot, rem = QPoly({k - low: c for k, c in self._c.items()}).divmod(other)
            return (QPoly({k + low: c for k, c in quot._c.items()}),
                    QPoly({k + low: c for k, c in rem._c.items()}))
        rem = dict(self._c)
        quot: dict[int, int] = {}
        top, lead = other.degree(), other.coeff(other.degree())
        while rem:
            k = max(rem)
            if k < top:
                break
            c, r = divmod(rem[k], lead)
            if r:
                break
            shift = k - top
            quot[shift] = c
            for j, b in other._c.items():
                v = rem.get(j + shift, 0) - c * b
                if v:
                    rem[j + shift] = v
                else:
                    rem.pop(j + shift, None)
        return QPoly(quot), QPoly(rem)

    def exact_div(self, other: "QPoly") -> "QPoly":
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise PolyError(f"{self} is not divisible by {other}")
        return quot

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, c in self.items():
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}" if mono else str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {str(k): c for k, c in self.items()}


ONE = QPoly(1)
ZERO = QPoly()

Exponent = tuple[int, ...]


class GradedPoly:
    """Sparse Laurent polynomial over named variables with QPoly coefficients.

    Exponent vectors follow the order of ``variables``.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, QPoly | int] | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise PolyError("repeated variable name")
        self.terms: dict[Exponent, QPoly] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.variables):
                raise PolyError(f"exponent {e} does not match {len(self.variables)} variables")
            c = QPoly._lift(c)
            if not c.is_zero():
                self.terms[tuple(e)] = c

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Mapping[str, int], coeff: QPoly | int = 1):
        idx = {v: i for i, v in enumerate(variables)}
        e = [0] * len(variables)
        for v, k in exps.items():
            e[idx[v]] += k
        return cls(variables, {tuple(e): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Mapping[str, int] | Exponent) -> QPoly:
        if not isinstance(exps, tuple):
            idx = {v: i for i, v in enumerate(self.variables)}
            e = [0] * len(self.variables)
            for v, k in exps.items():
                e[idx[v]] = k
            exps = tuple(e)
        return self.terms.get(exps, ZERO)

    def _same(self, other: "GradedPoly"):
        if self.variables != other.variables:
            raise PolyError("variable lists differ; embed first")

    def embed(self, variables: Sequence[str]) -> "GradedPoly":
        """Re-express over a larger (or reordered) variable list."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(variables)
            for i, k in zip(pos, e):
                f[i] = k
            out[tuple(f)] = c
        return GradedPoly(variables, out)

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return GradedPoly(self.variables, out)

    def __neg__(self):
        return GradedPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def scale(self, c: QPoly | int) -> "GradedPoly":
        c = QPoly._lift(c)
        return GradedPoly(self.variables, {e: v * c for e, v in self.terms.items()})

    def mul(self, other: "GradedPoly", keep: Callable[[Exponent], bool] | None = None) -> "GradedPoly":
        """Product; ``keep`` drops terms on the fly (for truncated series)."""
        self._same(other)
        out: dict[Exponent, QPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if keep is not None and not keep(e):
                    continue
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return GradedPoly(self.variables, out)

    __mul__ = mul

    def shift(self, exps: Mapping[str, int]) -> "GradedPoly":
        """Multiply by a monomial."""
        idx = {v: i for i, v in enumerate(self.variables)}
        delta = [0] * len(self.variables)
        for v, k in exps.items():
            delta[idx[v]] += k
        return GradedPoly(self.variables, {tuple(a + b for a, b in zip(e, delta)): c for e, c in self.terms.items()})

    def filter(self, keep: Callable[[Exponent], bool]) -> "GradedPoly":
        return GradedPoly(self.variables, {e: c for e, c in self.terms.items() if keep(e)})

    def map_coeffs(self, fn: Callable[[QPoly], QPoly]) -> "GradedPoly":
        return GradedPoly(self.variables, {e: fn(c) for e, c in self.terms.items()})

    def at_q(self, q: int) -> "GradedPoly":
        return self.map_coeffs(lambda c: QPoly(c(q)))

    def __eq__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def diff(self, other: "GradedPoly") -> list[tuple[Exponent, QPoly, QPoly]]:
        """Monomials where the two disagree, sorted."""
        self._same(other)
        keys = sorted(set(self.terms) | set(other.terms))
        return [(e, self.coeff(e), other.coeff(e)) for e in keys if self.coeff(e) != other.coeff(e)]

    def sorted_terms(self) -> list[tuple[Exponent, QPoly]]:
        """Deterministic order: total absolute degree, then exponents lexicographically."""
        return sorted(self.terms.items(), key=lambda t: (sum(map(abs, t[0])), tuple(-x for x in t[0])))

    def mono_str(self, e: Exponent) -> str:
        bits = []
        for v, k in zip(self.variables, e):
            if k == 1:
                bits.append(v)
            elif k:
                bits.append(f"{v}^{k}")
        return "*".join(bits) or "1"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            cs = str(c)
            if cs == "1":
                out.append(self.mono_str(e))
            else:
                out.append(f"({cs})*{self.mono_str(e)}" if any(e) else f"({cs})")
        return " + ".join(out)

    def __repr__(self):
        return f"GradedPoly({self})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [{"exponents": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()],
        }


def total(polys: Iterable[GradedPoly], variables: Sequence[str]) -> GradedPoly:
    out: dict[Exponent, QPoly] = {}
    for p in polys:
        for e, c in p.terms.items():
            out[e] = out[e] + c if e in out else c
    return GradedPoly(variables, out)
