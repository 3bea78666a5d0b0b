"""
Exact sparse multivariate polynomials with integer coefficients.

A monomial is a sorted tuple of (Var, exponent) pairs; a polynomial maps monomials to nonzero
Python ints. Values are never mutated after construction.
"""
from collections import Counter
from typing import Dict, Iterable, List, Mapping, NamedTuple, Tuple, Union

KIND_ORDER = ("q", "x", "y", "u", "t", "s")


class Var(NamedTuple):
    """
    A variable identified by (kind, t, i). Unused coordinates are -1: x_{t,i} has both,
    the aggregated x_t has only t, the type-D t_i and s_i have only i.
    """

    kind: str
    t: int = -1
    i: int = -1

    @property
    def sort_key(self):
        return (KIND_ORDER.index(self.kind) if self.kind in KIND_ORDER else len(KIND_ORDER), self.kind, self.t, self.i)

    @property
    def name(self) -> str:
        if self.t >= 0 and self.i >= 1:
            return f"{self.kind}{self.t}_{self.i}"
        if self.t >= 0:
            return f"{self.kind}{self.t}"
        if self.i >= 1:
            return f"{self.kind}_{self.i}"
        return self.kind

    @property
    def json_key(self) -> str:
        parts = [self.kind]
        if self.t >= 0:
            parts.append(str(self.t))
        if self.i >= 1:
            parts.append(str(self.i))
        return ":".join(parts)

    @property
    def latex(self) -> str:
        if self.t >= 0 and self.i >= 1:
            return f"{self.kind}_{{{self.t},{self.i}}}"
        if self.t >= 0:
            return f"{self.kind}_{{{self.t}}}"
        if self.i >= 1:
            return f"{self.kind}_{{{self.i}}}"
        return self.kind


Monomial = Tuple[Tuple[Var, int], ...]


def _normalize(powers: Mapping[Var, int]) -> Monomial:
    return tuple(sorted(((v, e) for v, e in powers.items() if e), key=lambda item: item[0].sort_key))


def _combine(a: Monomial, b: Monomial) -> Monomial:
    powers = dict(a)
    for var, exp in b:
        powers[var] = powers.get(var, 0) + exp
    return _normalize(powers)


class MVPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] = None):
        clean = {}
        for monomial, coeff in (terms or {}).items():
            if coeff:
                clean[monomial] = clean.get(monomial, 0) + coeff
        self._terms = {m: c for m, c in clean.items() if c}

    # construction

    @classmethod
    def constant(cls, value: int) -> "MVPoly":
        return cls({(): value})

    @classmethod
    def zero(cls) -> "MVPoly":
        return cls()

    @classmethod
    def one(cls) -> "MVPoly":
        return cls.constant(1)

    @classmethod
    def variable(cls, var: Var, exponent: int = 1) -> "MVPoly":
        return cls({_normalize({var: exponent}): 1})

    @classmethod
    def monomial(cls, powers: Mapping[Var, int], coeff: int = 1) -> "MVPoly":
        return cls({_normalize(powers): coeff})

    @staticmethod
    def _lift(other) -> "MVPoly":
        if isinstance(other, MVPoly):
            return other
        if isinstance(other, int):
            return MVPoly.constant(other)
        raise TypeError(f"Cannot combine a polynomial with {type(other).__name__}")

    # ring operations

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def __add__(self, other) -> "MVPoly":
        other = self._lift(other)
        result = dict(self._terms)
        for monomial, coeff in other._terms.items():
            result[monomial] = result.get(monomial, 0) + coeff
        return MVPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "MVPoly":
        return MVPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MVPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MVPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "MVPoly":
        other = self._lift(other)
        result = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = _combine(m1, m2)
                result[key] = result.get(key, 0) + c1 * c2
        return MVPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MVPoly":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials.")
        result = MVPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MVPoly.constant(other)
        if not isinstance(other, MVPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"MVPoly({self.to_text()})"

    def __str__(self):
        return self.to_text()

    # inspection

    def variables(self) -> List[Var]:
        found = {var for monomial in self._terms for var, _ in monomial}
        return sorted(found, key=lambda v: v.sort_key)

    def total(self) -> int:
        """Sum of coefficients (every variable set to 1)."""
        return sum(self._terms.values())

    def degree(self, var: Var) -> int:
        return max((dict(m).get(var, 0) for m in self._terms), default=0)

    def coefficient(self, var: Var, k: int) -> "MVPoly":
        """The coefficient of var^k as a polynomial in the remaining variables."""
        result = {}
        for monomial, coeff in self._terms.items():
            powers = dict(monomial)
            if powers.get(var, 0) == k:
                powers.pop(var, None)
                key = _normalize(powers)
                result[key] = result.get(key, 0) + coeff
        return MVPoly(result)

    def univariate_coefficients(self, var: Var) -> List[int]:
        """Coefficient list [c_0, c_1, ...] of a polynomial in var alone."""
        extra = [v for v in self.variables() if v != var]
        if extra:
            raise ValueError(f"Polynomial also involves {', '.join(v.name for v in extra)}")
        coefficients = [0] * (self.degree(var) + 1)
        for monomial, coeff in self._terms.items():
            coefficients[dict(monomial).get(var, 0)] += coeff
        return coefficients

    def substitute(self, mapping: Mapping[Var, Union["MVPoly", int]]) -> "MVPoly":
        result = MVPoly.zero()
        for monomial, coeff in self._terms.items():
            term = MVPoly.constant(coeff)
            kept = {}
            for var, exp in monomial:
                if var in mapping:
                    term = term * (self._lift(mapping[var]) ** exp)
                else:
                    kept[var] = exp
            result = result + term * MVPoly.monomial(kept)
        return result

    def evaluate(self, values: Mapping[Var, int]) -> int:
        total = 0
        for monomial, coeff in self._terms.items():
            value = coeff
            for var, exp in monomial:
                if var not in values:
                    raise ValueError(f"Value for variable '{var.name}' is not provided.")
                value *= values[var] ** exp
            total += value
        return total

    # output

    def _ordered_terms(self):
        def key(item):
            monomial, _ = item
            return (sum(e for _, e in monomial), [(v.sort_key, -e) for v, e in monomial])

        return sorted(self._terms.items(), key=key)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for monomial, coeff in self._ordered_terms():
            factors = [var.name if exp == 1 else f"{var.name}^{exp}" for var, exp in monomial]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> List[dict]:
        return [
            {"coeff": str(coeff), "exps": {var.json_key: exp for var, exp in monomial}}
            for monomial, coeff in self._ordered_terms()
        ]

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for monomial, coeff in self._ordered_terms():
            factors = "".join(var.latex if exp == 1 else f"{var.latex}^{{{exp}}}" for var, exp in monomial)
            magnitude = abs(coeff)
            body = factors if factors and magnitude == 1 else f"{magnitude}{factors}"
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def poly_sum(polys: Iterable[MVPoly]) -> MVPoly:
    """Sum many polynomials without rebuilding intermediate results."""
    totals = Counter()
    for poly in polys:
        totals.update(poly._terms)
    return MVPoly(dict(totals))


def poly_product(polys: Iterable[MVPoly]) -> MVPoly:
    result = MVPoly.one()
    for poly in polys:
        result = result * poly
    return result


# single-variable helpers

Q = Var("q")
T = Var("t")


def q(exponent: int = 1) -> MVPoly:
    return MVPoly.variable(Q, exponent)


def q_int(i: int, var: Var = Q) -> MVPoly:
    """[i]_q = 1 + q + ... + q^{i-1}; zero for i <= 0."""
    return poly_sum(MVPoly.variable(var, k) for k in range(i))


def q_factorial(n: int, var: Var = Q) -> MVPoly:
    return poly_product(q_int(i, var) for i in range(1, n + 1))


def histogram(values: Iterable[int], var: Var = Q) -> MVPoly:
    """sum of var^value over the values."""
    counts = Counter(values)
    return MVPoly({_normalize({var: value}): count for value, count in counts.items()})
