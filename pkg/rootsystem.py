"""
Static data of a simple root system.

Weights are plain tuples of Dynkin labels (the fundamental-weight basis),
roots carry both their simple-root coefficients and their labels, and the
whole system is an immutable RootSystem built once per Lie type and cached.
Conventions: A_ij = <alpha_i^vee, alpha_j>, so the labels of alpha_j are
column j of the Cartan matrix.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]
RationalWeight = Tuple[Fraction, ...]

SERIES = "ABCDEFG"

# Bourbaki numbering, 1-based node pairs.
_E_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))

_TYPE_TOKEN = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


class LieTypeError(ValueError):
    """Unknown or inadmissible (series, rank) pair."""


class WeightError(ValueError):
    """Weight of the wrong length, or not dominant where it must be."""


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self) -> None:
        if not _admissible(self.series, self.rank):
            raise LieTypeError(f"no simple Lie algebra of type {self.series}{self.rank}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _admissible(series: str, rank: int) -> bool:
    if series not in SERIES or not isinstance(rank, int):
        return False
    if series == "A":
        return rank >= 1
    if series in "BC":
        return rank >= 2
    if series == "D":
        return rank >= 4
    if series == "E":
        return rank in (6, 7, 8)
    if series == "F":
        return rank == 4
    return rank == 2


def parse_lie_type(token: str) -> LieType:
    """Parse an algebra token such as "G2" or " b3 " (letter, then rank)."""
    m = _TYPE_TOKEN.match(token or "")
    if not m:
        raise LieTypeError(f"cannot parse algebra token {token!r} (expected e.g. G2, B3)")
    return LieType(m.group(1).upper(), int(m.group(2)))


def classical_weyl_order(t: LieType) -> int:
    """|W| from the classification table; no enumeration involved."""
    r = t.rank
    if t.series == "A":
        return factorial(r + 1)
    if t.series in "BC":
        return 2 ** r * factorial(r)
    if t.series == "D":
        return 2 ** (r - 1) * factorial(r)
    if t.series == "E":
        return {6: 51_840, 7: 2_903_040, 8: 696_729_600}[r]
    if t.series == "F":
        return 1_152
    return 12


def cartan_matrix(t: LieType) -> Tuple[Tuple[int, ...], ...]:
    r = t.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    s = t.series
    if s == "A":
        for i in range(r - 1):
            bond(i, i + 1)
    elif s == "B":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 2, r - 1, -1, -2)  # alpha_r short
    elif s == "C":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 2, r - 1, -2, -1)  # alpha_r long
    elif s == "D":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 3, r - 1)
    elif s == "E":
        for i, j in _E_EDGES:
            if i <= r and j <= r:
                bond(i - 1, j - 1)
    elif s == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    else:
        bond(0, 1, -1, -3)  # alpha_1 long
    return tuple(tuple(row) for row in a)


def _symmetrizers(cartan: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Smallest positive integers d with d_i * A_ij == d_j * A_ji."""
    r = len(cartan)
    d: List[Optional[Fraction]] = [None] * r
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(r):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class Root:
    root_coeffs: Tuple[int, ...]
    labels: Tuple[int, ...]
    is_simple: bool

    @property
    def height(self) -> int:
        return sum(self.root_coeffs)


@dataclass(frozen=True, eq=False)
class RootSystem:
    lie_type: LieType
    cartan: Tuple[Tuple[int, ...], ...]
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[Root, ...]
    nonsimple_positive: Tuple[Root, ...]
    symmetrizers: Tuple[int, ...]
    rho: Weight
    rho_prime: RationalWeight
    k: int

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def name(self) -> str:
        return str(self.lie_type)

    def simple_root_labels(self, i: int) -> Weight:
        """Labels of alpha_i, 0-based (column i of the Cartan matrix)."""
        return tuple(row[i] for row in self.cartan)

    def zero(self) -> Weight:
        return (0,) * self.rank


def _labels_of(cartan: Sequence[Sequence[int]], coeffs: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(a * c for a, c in zip(row, coeffs)) for row in cartan)


def _positive_root_coeffs(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Height-by-height closure using alpha_i-strings through each root."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    known = set(simple)
    found = list(simple)
    level = list(simple)
    while level:
        nxt: List[Tuple[int, ...]] = []
        for beta in level:
            labels = _labels_of(cartan, beta)
            for i in range(r):
                p = 0
                lower = list(beta)
                lower[i] -= 1
                while tuple(lower) in known:
                    p += 1
                    lower[i] -= 1
                if p - labels[i] > 0:
                    gamma = list(beta)
                    gamma[i] += 1
                    gamma_t = tuple(gamma)
                    if gamma_t not in known:
                        known.add(gamma_t)
                        nxt.append(gamma_t)
        nxt.sort()
        found.extend(nxt)
        level = nxt
    return found


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    """All static data for ``t``; the same instance is returned per type."""
    cartan = cartan_matrix(t)
    inverse = sympy.Matrix(cartan).inv()
    cartan_inverse = tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(t.rank))
        for i in range(t.rank)
    )
    roots = tuple(
        Root(root_coeffs=c, labels=_labels_of(cartan, c), is_simple=sum(c) == 1)
        for c in _positive_root_coeffs(cartan)
    )
    nonsimple = tuple(root for root in roots if not root.is_simple)
    rho_prime = tuple(Fraction(2 - sum(row), 2) for row in cartan)
    rs = RootSystem(
        lie_type=t,
        cartan=cartan,
        cartan_inverse=cartan_inverse,
        positive_roots=roots,
        nonsimple_positive=nonsimple,
        symmetrizers=_symmetrizers(cartan),
        rho=(1,) * t.rank,
        rho_prime=rho_prime,
        k=len(nonsimple),
    )
    logger.debug("built %s: %d positive roots, k=%d, d=%s", t, len(roots), rs.k, rs.symmetrizers)
    return rs


def root_system(token: str) -> RootSystem:
    """Shorthand for build_root_system(parse_lie_type(token))."""
    return build_root_system(parse_lie_type(token))


def to_root_basis(rs: RootSystem, w: Sequence) -> Tuple[Fraction, ...]:
    return tuple(
        sum((a * x for a, x in zip(row, w)), Fraction(0)) for row in rs.cartan_inverse
    )


def weight_from_root_basis(rs: RootSystem, coeffs: Sequence) -> tuple:
    """Labels A*c of the element with simple-root coefficients ``coeffs``."""
    return _labels_of(rs.cartan, coeffs)


def is_in_Q_plus(rs: RootSystem, w: Sequence) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in to_root_basis(rs, w))


def inner_product(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    """Invariant form with (alpha_i, omega_j) = d_i * delta_ij."""
    cx = to_root_basis(rs, x)
    return sum((c * d * b for c, d, b in zip(cx, rs.symmetrizers, y)), Fraction(0))


def highest_root(rs: RootSystem) -> Root:
    return rs.positive_roots[-1]


def rho_prime_root_basis(rs: RootSystem) -> Tuple[Fraction, ...]:
    """Half the coefficient sum over the non-simple positive roots."""
    totals = [0] * rs.rank
    for root in rs.nonsimple_positive:
        for i, c in enumerate(root.root_coeffs):
            totals[i] += c
    return tuple(Fraction(t, 2) for t in totals)


def positive_root_count(t: LieType) -> int:
    """|Phi_+| from the classification, used to cross-check the closure."""
    r = t.rank
    return {
        "A": r * (r + 1) // 2,
        "B": r * r,
        "C": r * r,
        "D": r * (r - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(r, 0),
        "F": 24,
        "G": 6,
    }[t.series]


# weight helpers

def add_weights(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def is_dominant(w: Sequence) -> bool:
    return all(x >= 0 for x in w)


def check_weight(rs: RootSystem, w: Sequence[int], dominant: bool = False) -> Weight:
    """Validate arity (and dominance if asked); return the weight as a tuple."""
    w = tuple(w)
    if len(w) != rs.rank:
        raise WeightError(f"{rs.name} needs {rs.rank} Dynkin labels, got {len(w)}")
    if dominant and not is_dominant(w):
        raise WeightError(f"weight {format_labels(w)} is not dominant")
    return w


def parse_weight(text: str) -> Weight:
    """Parse "1,0,2" into (1, 0, 2)."""
    try:
        return tuple(int(part) for part in text.split(","))
    except (AttributeError, ValueError):
        raise WeightError(f"cannot parse Dynkin labels {text!r} (expected e.g. 1,0,2)") from None


def format_labels(w: Sequence) -> str:
    return ",".join(str(x) for x in w)


def format_weight(w: Sequence) -> str:
    """Render a weight over the fundamental weights, e.g. "2w1+w2" or "0"."""
    parts: List[str] = []
    for i, c in enumerate(w, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        parts.append(f"{sign}{coef}w{i}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def roots_table(rs: RootSystem) -> List[Dict[str, object]]:
    """Positive roots as plain dicts, lowest height first."""
    top = highest_root(rs)
    return [
        {
            "coeffs": list(root.root_coeffs),
            "labels": list(root.labels),
            "height": root.height,
            "simple": root.is_simple,
            "highest": root is top,
        }
        for root in rs.positive_roots
    ]
