"""
Dimension polynomial, signed shift tables and the layer polynomial.

D(lam) is Weyl's dimension product expanded as a polynomial in the Dynkin
labels. Subtracting subsets of the non-simple positive roots with
alternating signs turns D into R(lam), the number of distinct weights of
L(lam). Shifts are stored in label coordinates throughout.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Sequence, Set, Tuple

from polyring import (
    Coef,
    MultiPoly,
    poly_apply_operator,
    poly_degree,
    poly_interpolate,
    poly_mul,
    poly_pow,
    poly_scale,
    poly_shift,
)
from rootsystem import (
    RootSystem,
    Weight,
    add_weights,
    check_weight,
    sub_weights,
    to_root_basis,
)
from weylgroup import GroupTable, dominant_weights_below, orbit, orbit_size

logger = logging.getLogger(__name__)

LAYER_METHODS = ("operator", "shift", "interpolate")

# F4, B5 and C5 (k = 20) fit; E6 (k = 30) does not.
DEFAULT_MAX_LAYER_ROOTS = 20


class LayerTooLargeError(RuntimeError):
    """Refusal to build R for a type with too many non-simple positive roots."""

    def __init__(self, name: str, k: int, max_roots: int):
        super().__init__(
            f"refusing to build the layer polynomial of {name}: "
            f"{k} non-simple positive roots exceed --max-layer-roots {max_roots}"
        )
        self.name = name
        self.k = k
        self.max_roots = max_roots


_LAYER_CACHE: Dict[Tuple[RootSystem, str], MultiPoly] = {}


class GroupKind(enum.Enum):
    ZGROUP = "zgroup"
    WEYL = "weyl"


@dataclass
class SignedShiftTable:
    """Signed counts of label-coordinate shifts, all in -Q_+."""

    group_kind: GroupKind
    total_shift: Weight
    pairing_exponent: int
    entries: Dict[Weight, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.entries.values())

    def partner(self, shift: Weight) -> Weight:
        return sub_weights(self.total_shift, shift)

    def pairing_holds(self) -> bool:
        sign = -1 if self.pairing_exponent % 2 else 1
        return all(
            self.entries.get(self.partner(s), 0) == sign * c for s, c in self.entries.items()
        )

    def sorted_items(self) -> List[Tuple[Weight, int]]:
        return sorted(self.entries.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))


@lru_cache(maxsize=None)
def _weighted_roots(rs: RootSystem) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Per positive root: (c_i * d_i for each i, sum of them)."""
    out = []
    for root in rs.positive_roots:
        vec = tuple(c * d for c, d in zip(root.root_coeffs, rs.symmetrizers))
        out.append((vec, sum(vec)))
    return tuple(out)


@lru_cache(maxsize=None)
def _dim_numerator(rs: RootSystem) -> Tuple[MultiPoly, int]:
    """D times the product of the root heights, with integer coefficients."""
    r = rs.rank
    num = MultiPoly.constant(1, r)
    den = 1
    for vec, height in _weighted_roots(rs):
        num = poly_mul(num, MultiPoly.linear(vec, height))
        den *= height
    return num, den


@lru_cache(maxsize=None)
def dim_polynomial(rs: RootSystem) -> MultiPoly:
    num, den = _dim_numerator(rs)
    return poly_scale(num, Fraction(1, den))


def dim_value(rs: RootSystem, lam: Sequence[int]) -> Coef:
    """D(lam) from the product form; agrees with poly_eval(dim_polynomial(rs), lam)."""
    num = 1
    den = 1
    for vec, height in _weighted_roots(rs):
        num *= sum(v * (x + 1) for v, x in zip(vec, lam))
        if not num:
            return 0
        den *= height
    value = Fraction(num, den)
    return value.numerator if value.denominator == 1 else value


def _convolve(a: Dict[Weight, int], b: Dict[Weight, int]) -> Dict[Weight, int]:
    out: Dict[Weight, int] = {}
    for sa, ca in a.items():
        for sb, cb in b.items():
            s = tuple(x + y for x, y in zip(sa, sb))
            out[s] = out.get(s, 0) + ca * cb
    return {s: c for s, c in out.items() if c}


def _convolve_all(tables: List[Dict[Weight, int]], zero: Weight) -> Dict[Weight, int]:
    if not tables:
        return {zero: 1}
    if len(tables) == 1:
        return tables[0]
    mid = len(tables) // 2
    return _convolve(_convolve_all(tables[:mid], zero), _convolve_all(tables[mid:], zero))


@lru_cache(maxsize=None)
def _zgroup_entries(rs: RootSystem) -> Tuple[Tuple[Weight, int], ...]:
    zero = rs.zero()
    singles = [{zero: 1, tuple(-x for x in root.labels): -1} for root in rs.nonsimple_positive]
    entries = _convolve_all(singles, zero)
    logger.debug("Z2^%d table for %s: %d distinct shifts", rs.k, rs.name, len(entries))
    return tuple(entries.items())


def zgroup_shift_table(rs: RootSystem) -> SignedShiftTable:
    total = [0] * rs.rank
    for root in rs.nonsimple_positive:
        total = [t - x for t, x in zip(total, root.labels)]
    return SignedShiftTable(
        group_kind=GroupKind.ZGROUP,
        total_shift=tuple(total),
        pairing_exponent=rs.k,
        entries=dict(_zgroup_entries(rs)),
    )


def weyl_shift_table(rs: RootSystem, table: GroupTable) -> SignedShiftTable:
    """Shifts w.0 = w(rho) - rho with sign (-1)^l(w)."""
    out = SignedShiftTable(
        group_kind=GroupKind.WEYL,
        total_shift=tuple(-2 for _ in range(rs.rank)),
        pairing_exponent=len(rs.positive_roots),
    )
    for idx, image in enumerate(table.images):
        s = sub_weights(image, rs.rho)
        out.entries[s] = out.entries.get(s, 0) + table.sign(idx)
    out.entries = {s: c for s, c in out.entries.items() if c}
    return out


def _layer_by_operator(rs: RootSystem) -> MultiPoly:
    # R = prod_{alpha in Phi'_+} (1 - exp(-<alpha, d/dl>)) D, series truncated
    # to the degrees that can still reach D's top degree.
    r = rs.rank
    top = len(rs.positive_roots)
    cut = top - rs.k + 1
    scale = factorial(cut)
    g = MultiPoly.constant(1, r)
    for j, root in enumerate(rs.nonsimple_positive, start=1):
        u = MultiPoly.linear(root.labels)
        factor = MultiPoly.zero(r)
        for n in range(1, cut + 1):
            sign = 1 if n % 2 else -1
            factor = factor + poly_scale(poly_pow(u, n), sign * (scale // factorial(n)))
        g = poly_mul(g, factor, max_degree=top - (rs.k - j))
    num, den = _dim_numerator(rs)
    logger.debug("operator for %s: %d terms, D: %d terms", rs.name, g.term_count, num.term_count)
    applied = poly_apply_operator(num, g)
    return poly_scale(applied, Fraction(1, den * scale ** rs.k))


def _layer_by_shift(rs: RootSystem) -> MultiPoly:
    d = dim_polynomial(rs)
    out = MultiPoly.zero(rs.rank)
    for s, c in _zgroup_entries(rs):
        out = out + poly_scale(poly_shift(d, s), c)
    return out


def _layer_by_interpolation(rs: RootSystem) -> MultiPoly:
    entries = _zgroup_entries(rs)

    def value(x: Weight) -> Coef:
        return sum(c * dim_value(rs, add_weights(x, s)) for s, c in entries)

    return poly_interpolate(value, rs.rank, rs.rank)


def layer_polynomial(rs: RootSystem, method: str = "operator", max_roots: int = DEFAULT_MAX_LAYER_ROOTS) -> MultiPoly:
    """
    R = sum over the Z2^k shift table of count * D(lam + shift).

    All three methods return the same polynomial; "operator" is the only one
    practical beyond rank 4. A polynomial already built in this process is
    returned whatever ``max_roots`` says.
    """
    if method not in LAYER_METHODS:
        raise ValueError(f"unknown layer polynomial method {method!r}; expected one of {LAYER_METHODS}")
    key = (rs, method)
    if key in _LAYER_CACHE:
        return _LAYER_CACHE[key]
    if rs.k > max_roots:
        raise LayerTooLargeError(rs.name, rs.k, max_roots)
    if method == "operator":
        poly = _layer_by_operator(rs)
    elif method == "shift":
        poly = _layer_by_shift(rs)
    else:
        poly = _layer_by_interpolation(rs)
    report = layer_polynomial_report(rs, poly)
    if not report["passed"]:
        logger.warning("layer polynomial shape check failed for %s: %s", rs.name, report)
    _LAYER_CACHE[key] = poly
    return poly


def layer_polynomial_report(rs: RootSystem, poly: MultiPoly) -> Dict[str, object]:
    """Degree r, C(2r, r) terms and all coefficients positive."""
    r = rs.rank
    expected = comb(2 * r, r)
    all_positive = all(c > 0 for c in poly.terms.values())
    degree = poly_degree(poly)
    return {
        "algebra": rs.name,
        "degree": degree,
        "term_count": poly.term_count,
        "expected_terms": expected,
        "all_positive": all_positive,
        "passed": degree == r and poly.term_count == expected and all_positive,
    }


def weyl_alternating_dim_sum(rs: RootSystem, lam: Sequence[int], table: GroupTable) -> Coef:
    lam = check_weight(rs, lam)
    total: Coef = 0
    for s, c in weyl_shift_table(rs, table).entries.items():
        total += c * dim_value(rs, add_weights(lam, s))
    return total


def count_weights_bruteforce(rs: RootSystem, lam: Sequence[int]) -> int:
    """|P(lam)| as the sum of orbit lengths over the dominant weights below lam."""
    lam = check_weight(rs, lam, dominant=True)
    return sum(orbit_size(rs, mu) for mu in dominant_weights_below(rs, lam))


def weights_of(rs: RootSystem, lam: Sequence[int]) -> Set[Weight]:
    lam = check_weight(rs, lam, dominant=True)
    out: Set[Weight] = set()
    for mu in dominant_weights_below(rs, lam):
        out |= orbit(rs, mu)
    return out


def pair_shift_table(table: SignedShiftTable) -> List[Tuple[int, Weight, Weight]]:
    """
    Entries grouped with their partners (total_shift - s), each pair once,
    listed from the identity end: (count at s, s, partner).
    """
    seen: Set[Weight] = set()
    out: List[Tuple[int, Weight, Weight]] = []
    for s, c in table.sorted_items():
        if s in seen:
            continue
        p = table.partner(s)
        seen.add(s)
        seen.add(p)
        out.append((c, s, p))
    return out


def shift_table_in_root_basis(rs: RootSystem, table: SignedShiftTable) -> Dict[Tuple[int, ...], int]:
    """{(n_1, ..., n_r): count} for shifts -sum n_i alpha_i."""
    out: Dict[Tuple[int, ...], int] = {}
    for s, c in table.entries.items():
        coeffs = to_root_basis(rs, [-x for x in s])
        out[tuple(int(x) for x in coeffs)] = c
    return out
