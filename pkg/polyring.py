"""
Sparse multivariate polynomials over the rationals.

A MultiPoly maps exponent tuples to exact coefficients (ints when integral,
Fractions otherwise). Values are treated as immutable. The canonical order
for printing and serialization is graded lexicographic: lower total degree
first, and within a degree l1 before l2 and so on.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial, gcd, perm
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Coef = Union[int, Fraction]


class PolyError(ValueError):
    """Mismatched variable counts, bad points or malformed serialized data."""


def _coerce(c) -> Coef:
    if isinstance(c, bool):
        raise PolyError("boolean is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, float):
        raise PolyError(f"floating-point coefficient {c!r} is not exact")
    if isinstance(c, sympy.Rational):
        return _coerce(Fraction(int(c.p), int(c.q)))
    try:
        return _coerce(Fraction(c))
    except (TypeError, ValueError):
        raise PolyError(f"cannot use {c!r} as a rational coefficient") from None


def _clean(terms: Dict[Monomial, Coef]) -> Dict[Monomial, Coef]:
    out: Dict[Monomial, Coef] = {}
    for e, c in terms.items():
        if c:
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            out[e] = c
    return out


def variable_names(nvars: int) -> List[str]:
    return [f"l{i}" for i in range(1, nvars + 1)]


def _grlex_key(e: Monomial) -> Tuple[int, Tuple[int, ...]]:
    return sum(e), tuple(-x for x in e)


class MultiPoly:
    """Polynomial in ``nvars`` variables l1..ln with exact coefficients."""

    def __init__(self, terms: Optional[Mapping[Sequence[int], object]] = None, nvars: int = 0):
        if nvars < 0:
            raise PolyError("nvars must be non-negative")
        clean: Dict[Monomial, Coef] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise PolyError(f"exponent {e} does not have {nvars} entries")
            if any(x < 0 for x in e):
                raise PolyError(f"negative exponent in {e}")
            c = _coerce(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms: Dict[Monomial, Coef] = _clean(clean)
        self.nvars = nvars
        self._int_form: Optional[Tuple[int, List[Tuple[Monomial, int]]]] = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coef], nvars: int) -> "MultiPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p._int_form = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        """The variable l_{i+1} (``i`` is 0-based)."""
        if not 0 <= i < nvars:
            raise PolyError(f"variable index {i} out of range for {nvars} variables")
        return cls._raw({tuple(int(j == i) for j in range(nvars)): 1}, nvars)

    @classmethod
    def linear(cls, coeffs: Sequence, const=0) -> "MultiPoly":
        """const + sum_i coeffs[i] * l_{i+1}."""
        n = len(coeffs)
        terms: Dict[Monomial, object] = {(0,) * n: const}
        for i, c in enumerate(coeffs):
            terms[tuple(int(j == i) for j in range(n))] = c
        return cls(terms, n)

    @property
    def degree(self) -> int:
        return poly_degree(self)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Sequence[int]) -> Coef:
        return self.terms.get(tuple(exponents), 0)

    def __add__(self, other):
        return poly_add(self, _lift(other, self.nvars))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _lift(other, self.nvars))

    def __rsub__(self, other):
        return poly_sub(_lift(other, self.nvars), self)

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return poly_pow(self, n)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = point[0]
        return poly_eval(self, point)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == MultiPoly.constant(other, self.nvars)
        except PolyError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({to_text(self)!r}, nvars={self.nvars})"

    def __str__(self) -> str:
        return to_text(self)


def _lift(x, nvars: int) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    return MultiPoly.constant(x, nvars)


def _check_same(p: MultiPoly, q: MultiPoly) -> None:
    if p.nvars != q.nvars:
        raise PolyError(f"polynomials in {p.nvars} and {q.nvars} variables cannot be combined")


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    _check_same(p, q)
    out = dict(p.terms)
    for e, c in q.terms.items():
        out[e] = out.get(e, 0) + c
    return MultiPoly._raw(_clean(out), p.nvars)


def poly_neg(p: MultiPoly) -> MultiPoly:
    return MultiPoly._raw({e: -c for e, c in p.terms.items()}, p.nvars)


def poly_sub(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return poly_add(p, poly_neg(q))


def poly_scale(p: MultiPoly, c) -> MultiPoly:
    c = _coerce(c)
    if not c:
        return MultiPoly.zero(p.nvars)
    return MultiPoly._raw(_clean({e: v * c for e, v in p.terms.items()}), p.nvars)


def poly_mul(p: MultiPoly, q: MultiPoly, max_degree: Optional[int] = None) -> MultiPoly:
    """Product of p and q, dropping terms above ``max_degree`` if given."""
    _check_same(p, q)
    qterms = [(e, c, sum(e)) for e, c in q.terms.items()]
    out: Dict[Monomial, Coef] = {}
    get = out.get
    for ea, ca in p.terms.items():
        da = sum(ea)
        for eb, cb, db in qterms:
            if max_degree is not None and da + db > max_degree:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    return MultiPoly._raw(_clean(out), p.nvars)


def poly_pow(p: MultiPoly, n: int) -> MultiPoly:
    if n < 0:
        raise PolyError("negative powers are not polynomials")
    result = MultiPoly.constant(1, p.nvars)
    base = p
    while n:
        if n & 1:
            result = poly_mul(result, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return result


def poly_product(factors: Iterable[MultiPoly], nvars: int) -> MultiPoly:
    result = MultiPoly.constant(1, nvars)
    for f in factors:
        result = poly_mul(result, f)
    return result


def poly_shift(p: MultiPoly, v: Sequence) -> MultiPoly:
    """p(l1 + v1, ..., ln + vn), expanded one variable at a time."""
    if len(v) != p.nvars:
        raise PolyError(f"shift of length {len(v)} for {p.nvars} variables")
    terms = p.terms
    for i, a in enumerate(v):
        a = _coerce(a)
        if not a:
            continue
        out: Dict[Monomial, Coef] = {}
        for e, c in terms.items():
            n = e[i]
            apow = 1
            for j in range(n, -1, -1):
                ne = e[:i] + (j,) + e[i + 1:]
                out[ne] = out.get(ne, 0) + c * comb(n, j) * apow
                apow *= a
        terms = _clean(out)
    return MultiPoly._raw(dict(terms), p.nvars)


def _integer_form(p: MultiPoly) -> Tuple[int, List[Tuple[Monomial, int]]]:
    if p._int_form is None:
        den = 1
        for c in p.terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        p._int_form = (den, [(e, int(c * den)) for e, c in p.terms.items()])
    return p._int_form


def poly_eval(p: MultiPoly, point: Sequence) -> Coef:
    """Exact value at ``point``; integer points avoid Fraction arithmetic."""
    if len(point) != p.nvars:
        raise PolyError(f"point of length {len(point)} for {p.nvars} variables")
    if all(isinstance(x, int) for x in point):
        den, terms = _integer_form(p)
        total = 0
        for e, c in terms:
            for x, k in zip(point, e):
                if k:
                    c *= x ** k
            total += c
        return _coerce(Fraction(total, den))
    point = [_coerce(x) for x in point]
    total: Coef = 0
    for e, c in p.terms.items():
        for x, k in zip(point, e):
            if k:
                c *= x ** k
        total += c
    return _coerce(total)


def poly_restrict(p: MultiPoly, fixed: Mapping[int, object]) -> MultiPoly:
    """Substitute constants for the 0-based variables in ``fixed``; nvars is kept."""
    values = {i: _coerce(v) for i, v in fixed.items()}
    for i in values:
        if not 0 <= i < p.nvars:
            raise PolyError(f"variable index {i} out of range for {p.nvars} variables")
    out: Dict[Monomial, Coef] = {}
    for e, c in p.terms.items():
        ne = list(e)
        for i, v in values.items():
            if e[i]:
                c = c * v ** e[i]
                ne[i] = 0
        key = tuple(ne)
        out[key] = out.get(key, 0) + c
    return MultiPoly._raw(_clean(out), p.nvars)


def _simplex(nvars: int, degree: int) -> Iterator[Monomial]:
    if nvars == 0:
        yield ()
        return
    for first in range(degree + 1):
        for rest in _simplex(nvars - 1, degree - first):
            yield (first,) + rest


def _binomial_basis(b: int) -> Dict[int, Fraction]:
    """C(x, b) = x(x-1)...(x-b+1)/b! as {power: coefficient}."""
    poly: Dict[int, Coef] = {0: 1}
    for j in range(b):
        nxt: Dict[int, Coef] = {}
        for k, c in poly.items():
            nxt[k + 1] = nxt.get(k + 1, 0) + c
            nxt[k] = nxt.get(k, 0) - j * c
        poly = nxt
    fb = factorial(b)
    return {k: Fraction(c, fb) for k, c in poly.items() if c}


def poly_interpolate(values: Callable[[Monomial], object], nvars: int, degree: int) -> MultiPoly:
    """
    The unique polynomial of total degree <= ``degree`` agreeing with
    ``values`` on {x in N^nvars : |x| <= degree}.

    Forward differences are taken in place along each axis; the grid value
    at b then holds the Newton coefficient of prod_i C(l_i, b_i).
    """
    grid: Dict[Monomial, Coef] = {x: _coerce(values(x)) for x in _simplex(nvars, degree)}
    for axis in range(nvars):
        for step in range(1, degree + 1):
            for x in sorted(grid, key=lambda e: -e[axis]):
                if x[axis] < step:
                    continue
                below = x[:axis] + (x[axis] - 1,) + x[axis + 1:]
                grid[x] = grid[x] - grid[below]
    basis: Dict[int, Dict[int, Fraction]] = {b: _binomial_basis(b) for b in range(degree + 1)}
    out: Dict[Monomial, Coef] = {}
    for b, coef in grid.items():
        if not coef:
            continue
        partial: Dict[Monomial, Coef] = {(): coef}
        for bi in b:
            nxt: Dict[Monomial, Coef] = {}
            for e, c in partial.items():
                for k, bc in basis[bi].items():
                    ne = e + (k,)
                    nxt[ne] = nxt.get(ne, 0) + c * bc
            partial = nxt
        for e, c in partial.items():
            out[e] = out.get(e, 0) + c
    return MultiPoly._raw(_clean(out), nvars)


def _bounded_below(gamma: Monomial, budget: int) -> Iterator[Monomial]:
    """All delta <= gamma componentwise with |delta| <= budget."""
    if not gamma:
        yield ()
        return
    head, rest = gamma[0], gamma[1:]
    for d in range(min(head, budget) + 1):
        for tail in _bounded_below(rest, budget - d):
            yield (d,) + tail


def poly_apply_operator(p: MultiPoly, g: MultiPoly) -> MultiPoly:
    """
    g(d/dl1, ..., d/dln) applied to p, i.e. sum_beta g_beta * d^beta p.

    Only monomials of g with degree at least its lowest degree can act, so
    for each term of p the surviving remainders are enumerated directly.
    """
    _check_same(p, g)
    if g.is_zero():
        return MultiPoly.zero(p.nvars)
    low = min(sum(e) for e in g.terms)
    gterms = g.terms
    out: Dict[Monomial, Coef] = {}
    for gamma, c in p.terms.items():
        budget = sum(gamma) - low
        if budget < 0:
            continue
        for delta in _bounded_below(gamma, budget):
            beta = tuple(x - y for x, y in zip(gamma, delta))
            gb = gterms.get(beta)
            if gb is None:
                continue
            factor = 1
            for x, y in zip(gamma, beta):
                if y:
                    factor *= perm(x, y)
            out[delta] = out.get(delta, 0) + c * gb * factor
    return MultiPoly._raw(_clean(out), p.nvars)


def poly_degree(p: MultiPoly) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(e) for e in p.terms), default=-1)


def poly_term_count(p: MultiPoly) -> int:
    return len(p.terms)


def poly_coefficients(p: MultiPoly) -> List[Tuple[Monomial, Coef]]:
    return [(e, p.terms[e]) for e in sorted(p.terms, key=_grlex_key)]


def homogeneous_part(p: MultiPoly, degree: int) -> MultiPoly:
    return MultiPoly._raw({e: c for e, c in p.terms.items() if sum(e) == degree}, p.nvars)


def format_coef(c: Coef) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_coef(text: str) -> Coef:
    try:
        return _coerce(Fraction(text))
    except (TypeError, ValueError, ZeroDivisionError):
        raise PolyError(f"malformed coefficient {text!r}") from None


def _monomial_text(e: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}**{k}")
    return "*".join(parts)


def to_text(p: MultiPoly, names: Optional[Sequence[str]] = None) -> str:
    """Graded-lex text such as "1 + 3/2*l1 + 3/2*l2 + 1/2*l1**2 + 2*l1*l2"."""
    names = list(names or variable_names(p.nvars))
    if p.is_zero():
        return "0"
    pieces: List[str] = []
    for e, c in poly_coefficients(p):
        mono = _monomial_text(e, names)
        mag = abs(Fraction(c))
        if not mono:
            body = format_coef(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coef(mag)}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(pieces)


def to_json(p: MultiPoly, names: Optional[Sequence[str]] = None) -> Dict[str, object]:
    return {
        "vars": list(names or variable_names(p.nvars)),
        "terms": [{"exp": list(e), "coef": format_coef(c)} for e, c in poly_coefficients(p)],
    }


def from_json(doc: Mapping) -> MultiPoly:
    try:
        nvars = len(doc["vars"])
        terms: Dict[Monomial, Coef] = {}
        for term in doc["terms"]:
            terms[tuple(term["exp"])] = parse_coef(term["coef"])
    except (KeyError, TypeError) as e:
        raise PolyError(f"malformed polynomial document: {e}") from None
    return MultiPoly(terms, nvars)


def _symbols(nvars: int, symbols=None):
    if symbols is not None:
        return tuple(symbols)
    if nvars == 0:
        return ()
    return tuple(sympy.symbols(f"l1:{nvars + 1}"))


def to_sympy(p: MultiPoly, symbols=None):
    syms = _symbols(p.nvars, symbols)
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        c = Fraction(c)
        mono = sympy.Integer(1)
        for s, k in zip(syms, e):
            mono *= s ** k
        expr += sympy.Rational(c.numerator, c.denominator) * mono
    return expr


def from_sympy(expr, symbols) -> MultiPoly:
    """Expand a sympy expression polynomial in ``symbols`` into a MultiPoly."""
    syms = tuple(symbols)
    try:
        poly = sympy.Poly(sympy.expand(expr), *syms)
    except sympy.PolynomialError as e:
        raise PolyError(f"not a polynomial in {syms}: {e}") from None
    terms: Dict[Monomial, Coef] = {}
    for monom, coeff in poly.terms():
        if not coeff.is_Rational:
            raise PolyError(f"coefficient {coeff} is not rational")
        terms[tuple(monom)] = Fraction(int(coeff.p), int(coeff.q))
    return MultiPoly(terms, len(syms))


def to_latex(p: MultiPoly) -> str:
    syms = sympy.symbols(" ".join(f"lambda_{i}" for i in range(1, p.nvars + 1)), seq=True)
    return sympy.latex(to_sympy(p, syms), order="grlex")
