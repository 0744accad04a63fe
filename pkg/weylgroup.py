"""
Weyl group action in Dynkin-label coordinates.

Group elements are identified with their image of rho (the regular orbit),
found breadth-first, so an element's BFS depth is its length. Each element
also keeps its parent and the simple reflection that produced it, which is
enough to recover reduced words and the shifted action.
"""

from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Set, Tuple

from rootsystem import (
    RootSystem,
    Weight,
    WeightError,
    add_weights,
    check_weight,
    classical_weyl_order,
    sub_weights,
)

logger = logging.getLogger(__name__)

# E7 (2,903,040) fits, E8 does not.
DEFAULT_MAX_ORDER = 3_000_000


class GroupTooLargeError(RuntimeError):
    """Refusal to enumerate a Weyl group above the configured bound."""

    def __init__(self, name: str, order: int, max_order: int):
        super().__init__(
            f"refusing to enumerate W({name}): order {order:,} exceeds --max-order {max_order:,}"
        )
        self.name = name
        self.order = order
        self.max_order = max_order


@lru_cache(maxsize=None)
def _columns(rs: RootSystem) -> Tuple[Weight, ...]:
    return tuple(rs.simple_root_labels(i) for i in range(rs.rank))


def _reflect(cols: Tuple[Weight, ...], i: int, w: Weight) -> Weight:
    c = w[i]
    if c == 0:
        return w
    return tuple(x - c * a for x, a in zip(w, cols[i]))


def simple_reflection(rs: RootSystem, i: int, w: Sequence[int]) -> Weight:
    """s_i(w) = w - w_i * alpha_i, with ``i`` counted from 1."""
    if not 1 <= i <= rs.rank:
        raise WeightError(f"simple reflection index {i} out of range 1..{rs.rank}")
    return _reflect(_columns(rs), i - 1, tuple(w))


def orbit(rs: RootSystem, w: Sequence[int]) -> Set[Weight]:
    cols = _columns(rs)
    start = tuple(w)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in range(rs.rank):
            if v[i] == 0:
                continue
            u = _reflect(cols, i, v)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


@lru_cache(maxsize=4096)
def _orbit_size_dominant(rs: RootSystem, w: Weight) -> int:
    return len(orbit(rs, w))


def orbit_size(rs: RootSystem, w: Sequence[int]) -> int:
    dom, _ = dominantize(rs, w)
    return _orbit_size_dominant(rs, dom)


def dominantize(rs: RootSystem, w: Sequence[int]) -> Tuple[Weight, int]:
    """Reflect at negative labels until dominant; returns (weight, (-1)^steps)."""
    cols = _columns(rs)
    v = tuple(w)
    parity = 1
    while True:
        for i, x in enumerate(v):
            if x < 0:
                v = _reflect(cols, i, v)
                parity = -parity
                break
        else:
            return v, parity


@lru_cache(maxsize=4096)
def _dominant_below(rs: RootSystem, lam: Weight) -> FrozenSet[Weight]:
    # dominant weights below lam are linked to lam by chains of dominant
    # weights differing by positive roots
    roots = [root.labels for root in rs.positive_roots]
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for a in roots:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in seen and all(x >= 0 for x in nu):
                seen.add(nu)
                queue.append(nu)
    return frozenset(seen)


def dominant_weights_below(rs: RootSystem, lam: Sequence[int]) -> FrozenSet[Weight]:
    """P_+(lam): dominant mu with lam - mu in Q_+."""
    return _dominant_below(rs, check_weight(rs, lam, dominant=True))


class ResolutionKind(enum.Enum):
    ZERO = "zero"
    SIGNED = "signed"


@dataclass(frozen=True)
class AuxResolution:
    kind: ResolutionKind
    sign: int = 0
    dominant: Optional[Weight] = None

    @classmethod
    def zero(cls) -> "AuxResolution":
        return cls(ResolutionKind.ZERO)

    @classmethod
    def signed(cls, sign: int, dominant: Weight) -> "AuxResolution":
        return cls(ResolutionKind.SIGNED, sign, dominant)

    @property
    def is_zero(self) -> bool:
        return self.kind is ResolutionKind.ZERO

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"{'+' if self.sign > 0 else '-'}ch({','.join(map(str, self.dominant))})"


def shifted_resolve(rs: RootSystem, lam: Sequence[int]) -> AuxResolution:
    """Resolve the auxiliary character ch_lam to +-ch_mu (mu dominant) or zero."""
    cols = _columns(rs)
    v = add_weights(lam, rs.rho)
    parity = 1
    while True:
        if 0 in v:
            return AuxResolution.zero()
        for i, x in enumerate(v):
            if x < 0:
                v = _reflect(cols, i, v)
                parity = -parity
                break
        else:
            return AuxResolution.signed(parity, sub_weights(v, rs.rho))


@dataclass(frozen=True, eq=False)
class GroupTable:
    """Weyl group as the BFS tree of the rho orbit; index 0 is the identity."""

    images: Tuple[Weight, ...]
    lengths: Tuple[int, ...]
    parents: Tuple[int, ...]
    generators: Tuple[int, ...]
    index: Mapping[Weight, int]

    @property
    def order(self) -> int:
        return len(self.images)

    @property
    def elements(self) -> List[Tuple[Weight, int]]:
        return list(zip(self.images, self.lengths))

    def sign(self, idx: int) -> int:
        return -1 if self.lengths[idx] % 2 else 1

    def word(self, idx: int) -> List[int]:
        """Simple reflections (1-based) in application order, rightmost first."""
        path: List[int] = []
        while idx != 0:
            path.append(self.generators[idx] + 1)
            idx = self.parents[idx]
        path.reverse()
        return path


def enumerate_group(rs: RootSystem, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    order = classical_weyl_order(rs.lie_type)
    if order > max_order:
        raise GroupTooLargeError(rs.name, order, max_order)
    return _enumerate_group(rs)


@lru_cache(maxsize=8)
def _enumerate_group(rs: RootSystem) -> GroupTable:
    cols = _columns(rs)
    images: List[Weight] = [rs.rho]
    lengths = [0]
    parents = [-1]
    generators = [-1]
    index: Dict[Weight, int] = {rs.rho: 0}
    head = 0
    while head < len(images):
        v = images[head]
        depth = lengths[head] + 1
        for i in range(rs.rank):
            u = _reflect(cols, i, v)
            if u not in index:
                index[u] = len(images)
                images.append(u)
                lengths.append(depth)
                parents.append(head)
                generators.append(i)
        head += 1
    logger.debug("enumerated W(%s): %d elements", rs.name, len(images))
    return GroupTable(tuple(images), tuple(lengths), tuple(parents), tuple(generators), MappingProxyType(index))


def shifted_action(rs: RootSystem, table: GroupTable, idx: int, lam: Sequence[int]) -> Weight:
    """w.lam = w(lam + rho) - rho for the element at ``idx``."""
    cols = _columns(rs)
    v = add_weights(lam, rs.rho)
    for gen in table.word(idx):
        v = _reflect(cols, gen - 1, v)
    return sub_weights(v, rs.rho)


def longest_element_length(rs: RootSystem) -> int:
    return len(rs.positive_roots)
