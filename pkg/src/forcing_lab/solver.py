"""Exact forcing and anti-forcing solvers with witnesses, plus the
closed-form bound evaluators.

The minimum-forcing search is iterative deepening over subsets of the
matching in lexicographic edge order.  Two prunes keep it exact: subsets
that miss an already-discovered alternating cycle are skipped (such a set
cannot force), and sizes below the best disjoint packing of discovered
cycles are never tried.  Each failed uniqueness check contributes a new
cycle, so the search is a lazy minimum-hitting-set computation.  The
anti-forcing search is the same machinery over the non-matching edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import _backend
from .errors import GraphError, MatchingError, NoPerfectMatchingError, ResourceLimitError
from .graphs import Graph, is_connected
from .matchings import (
    Matching,
    alternating_cycles,
    check_perfect_matching,
    cycles_from_two_matchings,
    enumerate_perfect_matchings,
)


@dataclass(frozen=True)
class SolverLimits:
    """Resource ceilings; exceeding one raises ResourceLimitError."""

    pm_limit: int = 100_000
    node_limit: int = 10_000_000
    cycle_limit: int = 1_000_000


DEFAULT_LIMITS = SolverLimits()


@dataclass(frozen=True)
class ForcingResult:
    value: int
    witness_matching: Matching
    witness_set: tuple[tuple[int, int], ...]
    method: str


@dataclass(frozen=True)
class SpectrumReport:
    """f(G,M) for every perfect matching, hence f(G) and F(G)."""

    per_matching: tuple[tuple[Matching, int], ...]
    f_min: int
    f_max: int
    c_values: Optional[tuple[int, ...]] = None


# ---------------------------------------------------------------------------
# subset search machinery


def _greedy_disjoint_count(masks: Sequence[int]) -> int:
    used = 0
    count = 0
    for m in masks:
        if not (m & used):
            used |= m
            count += 1
    return count


def _hitting_candidates(n: int, k: int, constraints: list[int], budget: list[int]):
    """Yield k-subsets of range(n) in lexicographic order that hit every
    constraint mask.  Decrements ``budget`` per node; raises on exhaustion."""

    def rec(start: int, slots: int, unhit: list[int], chosen: tuple[int, ...]):
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimitError("subset-search node limit exceeded")
        if not unhit:
            for tail in itertools.combinations(range(start, n), slots):
                budget[0] -= 1
                if budget[0] < 0:
                    raise ResourceLimitError("subset-search node limit exceeded")
                yield chosen + tail
            return
        if slots == 0:
            return
        for c in unhit:
            if c >> start == 0:
                return  # some cycle can no longer be hit
        if _greedy_disjoint_count(unhit) > slots:
            return  # disjoint unhit cycles exceed the remaining slots
        for i in range(start, n - slots + 1):
            bit = 1 << i
            yield from rec(
                i + 1,
                slots - 1,
                [c for c in unhit if not (c & bit)],
                chosen + (i,),
            )

    yield from rec(0, k, list(constraints), ())


def _lazy_minimum_hitting(
    n_universe: int,
    check: Callable[[tuple[int, ...]], Optional[int]],
    node_limit: int,
    seed_constraints: Sequence[int] = (),
) -> tuple[int, tuple[int, ...]]:
    """Smallest (then lexicographically first) subset accepted by ``check``.

    ``check`` returns None to accept a candidate, or a new constraint mask
    (disjoint from the candidate) that future candidates must hit.
    """
    constraints = list(dict.fromkeys(seed_constraints))
    budget = [node_limit]
    k = _greedy_disjoint_count(constraints)
    while k <= n_universe:
        grew = False
        for cand in _hitting_candidates(n_universe, k, constraints, budget):
            new_constraint = check(cand)
            if new_constraint is None:
                return k, cand
            constraints.append(new_constraint)
            grew = True
            break
        if grew:
            k = max(k, _greedy_disjoint_count(constraints))
        else:
            k += 1
    raise AssertionError("hitting search exhausted its universe")


def _vertex_mask(edges: Sequence[tuple[int, int]]) -> int:
    mask = 0
    for u, v in edges:
        mask |= (1 << u) | (1 << v)
    return mask


# ---------------------------------------------------------------------------
# forcing numbers


def is_forcing_set(g: Graph, m: Matching, s: Sequence[tuple[int, int]]) -> bool:
    """True iff ``g - V(s)`` has a unique perfect matching (s must be in m)."""
    check_perfect_matching(g, m)
    s_norm = [(u, v) if u < v else (v, u) for u, v in s]
    m_set = set(m.edges)
    if any(e not in m_set for e in s_norm):
        raise MatchingError("forcing-set candidate is not a subset of the matching")
    active = g.full_mask & ~_vertex_mask(s_norm)
    return _backend.pm_count(g.handle, active, 2) == 1


def is_anti_forcing_set(g: Graph, m: Matching, x: Sequence[tuple[int, int]]) -> bool:
    """True iff ``m`` is the unique perfect matching of ``g - x`` (x avoids m)."""
    check_perfect_matching(g, m)
    x_norm = [(u, v) if u < v else (v, u) for u, v in x]
    edge_set = set(g.edges)
    m_set = set(m.edges)
    for e in x_norm:
        if e not in edge_set:
            raise MatchingError(f"anti-forcing candidate uses non-edge {e}")
        if e in m_set:
            raise MatchingError("anti-forcing set must avoid the matching")
    return _backend.pm_count(g.handle, g.full_mask, 2, tuple(x_norm)) == 1


def _difference_cycle_edges(
    m: Matching, other_edges: tuple[tuple[int, int], ...], covered: int, order: int
) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Edges (m-side, other-side) of the first symmetric-difference cycle."""
    other = Matching(other_edges, covered)
    cyc = cycles_from_two_matchings(m, other, order)[0]
    ma = m.mates(order)
    on_cycle = set(cyc)
    m_side = {
        (v, ma[v]) if v < ma[v] else (ma[v], v)
        for v in cyc
        if ma[v] >= 0 and ma[v] in on_cycle
    }
    mo = other.mates(order)
    o_side = {
        (v, mo[v]) if v < mo[v] else (mo[v], v)
        for v in cyc
        if mo[v] >= 0 and mo[v] in on_cycle
    }
    return tuple(sorted(m_side - o_side)), tuple(sorted(o_side - m_side))


def forcing_number(
    g: Graph,
    m: Matching,
    *,
    method: str = "subset_search",
    limits: SolverLimits = DEFAULT_LIMITS,
) -> ForcingResult:
    """Minimum forcing set of ``m`` with the lexicographically-first witness.

    ``method="cycle_hitting"`` solves the equivalent minimum hitting set over
    the full alternating-cycle list instead; it exists as an independent
    cross-check of the default subset search.
    """
    check_perfect_matching(g, m)
    universe = m.edges
    position = {e: i for i, e in enumerate(universe)}
    h = g.handle
    full = g.full_mask

    if method == "cycle_hitting":
        seeds = []
        for cyc in alternating_cycles(g, m, limits.cycle_limit):
            mask = 0
            for e in cyc.m_edges:
                mask |= 1 << position[e]
            seeds.append(mask)
        value, cand = _lazy_minimum_hitting(
            len(universe), lambda _cand: None, limits.node_limit, seeds
        )
        witness = tuple(universe[i] for i in cand)
        return ForcingResult(value, m, witness, "cycle_hitting")

    if method != "subset_search":
        raise ValueError(f"unknown forcing method {method!r}")

    def check(cand: tuple[int, ...]) -> Optional[int]:
        smask = _vertex_mask([universe[i] for i in cand])
        active = full & ~smask
        if _backend.pm_count(h, active, 2) == 1:
            return None
        pms = _backend.pm_enumerate(h, active, 2)
        residual = tuple(e for e in universe if not (smask & (1 << e[0])))
        other = pms[0] if pms[0] != residual else pms[1]
        res_matching = Matching(residual, active)
        m_side, _ = _difference_cycle_edges(res_matching, other, active, g.order)
        mask = 0
        for e in m_side:
            mask |= 1 << position[e]
        return mask

    value, cand = _lazy_minimum_hitting(len(universe), check, limits.node_limit)
    witness = tuple(universe[i] for i in cand)
    return ForcingResult(value, m, witness, "subset_search")


def anti_forcing_number(
    g: Graph, m: Matching, *, limits: SolverLimits = DEFAULT_LIMITS
) -> ForcingResult:
    """Minimum set of non-matching edges whose removal leaves ``m`` unique."""
    check_perfect_matching(g, m)
    m_set = set(m.edges)
    universe = tuple(e for e in g.edges if e not in m_set)
    position = {e: i for i, e in enumerate(universe)}
    h = g.handle
    full = g.full_mask

    def check(cand: tuple[int, ...]) -> Optional[int]:
        removed = tuple(universe[i] for i in cand)
        if _backend.pm_count(h, full, 2, removed) == 1:
            return None
        pms = _backend.pm_enumerate(h, full, 2, removed)
        other = pms[0] if pms[0] != m.edges else pms[1]
        _, non_m_side = _difference_cycle_edges(m, other, full, g.order)
        mask = 0
        for e in non_m_side:
            mask |= 1 << position[e]
        return mask

    value, cand = _lazy_minimum_hitting(len(universe), check, limits.node_limit)
    witness = tuple(universe[i] for i in cand)
    return ForcingResult(value, m, witness, "subset_search")


def _fast_value(g: Graph, m: Matching, limits: SolverLimits, forcing: bool):
    """Compiled whole-search value when the backend provides it, else None.

    The compiled search mirrors the subset search (same prunes, same
    deepening) and returns only the optimum size; witness-producing calls
    always take the Python path.
    """
    fn = getattr(_backend, "forcing_value" if forcing else "anti_forcing_value", None)
    if fn is None:
        return None
    value = fn(g.handle, m.mates(g.order), limits.node_limit)
    if value == -1:
        raise ResourceLimitError("subset-search node limit exceeded")
    if value < 0:
        return None  # universe too large for the compiled path
    return value


def cycle_packing(
    g: Graph, m: Matching, *, limits: SolverLimits = DEFAULT_LIMITS
) -> int:
    """C(G,M): maximum number of vertex-disjoint M-alternating cycles.

    Equivalent to a maximum independent set in the conflict graph of the
    enumerated cycles; computed by branching over distinct vertex masks.
    """
    cycles = alternating_cycles(g, m, limits.cycle_limit)
    masks = tuple(sorted({c.vertex_mask for c in cycles}))
    return _backend.pack_masks(masks)


def spectrum(
    g: Graph,
    *,
    limits: SolverLimits = DEFAULT_LIMITS,
    with_cycle_packing: bool = False,
    method: str = "subset_search",
) -> SpectrumReport:
    """f(G,M) over every perfect matching (full enumeration)."""
    if g.order % 2:
        raise NoPerfectMatchingError("odd order graph has no perfect matching")
    pms = enumerate_perfect_matchings(g, limit=limits.pm_limit + 1)
    if not pms:
        raise NoPerfectMatchingError("graph has no perfect matching")
    if len(pms) > limits.pm_limit:
        raise ResourceLimitError(
            f"more than {limits.pm_limit} perfect matchings; raise the pm limit"
        )
    values = []
    for m in pms:
        value = _fast_value(g, m, limits, True) if method == "subset_search" else None
        if value is None:
            value = forcing_number(g, m, method=method, limits=limits).value
        values.append(value)
    per = tuple(zip(pms, values))
    c_values = None
    if with_cycle_packing:
        c_values = tuple(cycle_packing(g, m, limits=limits) for m in pms)
    return SpectrumReport(per, min(values), max(values), c_values)


def anti_forcing_values(
    g: Graph, *, limits: SolverLimits = DEFAULT_LIMITS
) -> tuple[int, ...]:
    """af(G,M) per perfect matching, in enumeration order."""
    pms = enumerate_perfect_matchings(g, limit=limits.pm_limit + 1)
    if not pms:
        raise NoPerfectMatchingError("graph has no perfect matching")
    if len(pms) > limits.pm_limit:
        raise ResourceLimitError(
            f"more than {limits.pm_limit} perfect matchings; raise the pm limit"
        )
    out = []
    for m in pms:
        value = _fast_value(g, m, limits, False)
        if value is None:
            value = anti_forcing_number(g, m, limits=limits).value
        out.append(value)
    return tuple(out)


def max_anti_forcing(g: Graph, *, limits: SolverLimits = DEFAULT_LIMITS) -> int:
    """Af(G): the maximum anti-forcing number over all perfect matchings."""
    return max(anti_forcing_values(g, limits=limits))


# ---------------------------------------------------------------------------
# closed-form bounds, exact arithmetic


@dataclass(frozen=True)
class ExactBound:
    """The exact value ``a + c*sqrt(b)``; comparisons square the radical."""

    a: Fraction
    c: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def cmp(self, t) -> int:
        """Sign of (self - t) for rational t."""
        t = Fraction(t)
        if self.c == 0 or self.b == 0:
            d = self.a - t
            return (d > 0) - (d < 0)
        if self.b < 0:
            raise GraphError("negative radicand in exact bound")
        d = t - self.a  # compare c*sqrt(b) against d
        lhs_sq = self.c * self.c * self.b
        if self.c > 0:
            if d <= 0:
                return 1
            return (lhs_sq > d * d) - (lhs_sq < d * d)
        if d >= 0:
            return -1
        return (d * d > lhs_sq) - (d * d < lhs_sq)

    def holds_as_lower_bound(self, observed: int) -> bool:
        return self.cmp(observed) <= 0

    def holds_as_upper_bound(self, observed: int) -> bool:
        return self.cmp(observed) >= 0

    def equals(self, observed: int) -> bool:
        return self.cmp(observed) == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.c) * float(self.b) ** 0.5

    def __str__(self) -> str:
        if self.c == 0 or self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.c}*sqrt({self.b})"


@dataclass(frozen=True)
class BoundInfo:
    bound_id: str
    kind: str  # "f_lower" | "F_upper"
    value: ExactBound
    applicable: bool
    hypothesis: str


@dataclass(frozen=True)
class BoundReport:
    n: int
    e: int
    delta: int
    bounds: tuple[BoundInfo, ...]

    def get(self, bound_id: str) -> BoundInfo:
        for b in self.bounds:
            if b.bound_id == bound_id:
                return b
        raise KeyError(bound_id)


def bound_values(
    g: Graph,
    *,
    bipartite: Optional[bool] = None,
    split: Optional[bool] = None,
    cograph: Optional[bool] = None,
) -> BoundReport:
    """Every closed-form f-lower / F-upper bound, evaluated exactly.

    Inapplicable bounds are flagged, never errored.  Class flags are
    recomputed when not supplied.
    """
    if g.order % 2 or g.order < 2:
        raise GraphError("bounds are defined for even order >= 2")
    n = g.order // 2
    e = g.edge_count
    delta = g.min_degree
    if bipartite is None:
        from .graphs import bipartition_of

        bipartite = bipartition_of(g) is not None
    if split is None or cograph is None:
        from .families import is_cograph, is_split

        split = is_split(g) if split is None else split
        cograph = is_cograph(g) if cograph is None else cograph
    connected = is_connected(g)

    half = Fraction(1, 2)
    bounds = [
        BoundInfo(
            "COR_2_2",
            "f_lower",
            ExactBound(n - half, Fraction(-1), Fraction(2 * n * n - n - e) + Fraction(1, 4)),
            True,
            "",
        ),
        BoundInfo(
            "COR_2_4",
            "f_lower",
            ExactBound(n - half, Fraction(-1), Fraction(2 * n * n - 2 * e) + Fraction(1, 4)),
            bool(bipartite),
            "bipartite",
        ),
        BoundInfo(
            "THM_2_5",
            "f_lower",
            ExactBound(Fraction(delta - 1)),
            bool(bipartite),
            "bipartite",
        ),
        BoundInfo(
            "THM_2_8",
            "f_lower",
            ExactBound(Fraction(delta - 1, 2)),
            bool(split or cograph),
            "split or cograph",
        ),
        BoundInfo(
            "PROP_3_2",
            "F_upper",
            ExactBound(Fraction(e - n, 2)),
            True,
            "",
        ),
        BoundInfo(
            "COR_3_1",
            "F_upper",
            ExactBound(Fraction(e - n, 2) if e >= 3 * n - 2 else Fraction(e - 2 * n + 1)),
            connected,
            "connected",
        ),
        BoundInfo(
            "COR_3_5",
            "F_upper",
            ExactBound(
                Fraction(n - e - 1, 2),
                half,
                Fraction(e * e + 2 * (n + 1) * e - 3 * n * n - 2 * n + 1),
            ),
            True,
            "",
        ),
        BoundInfo(
            "CONJ_5_1",
            "F_upper",
            ExactBound(Fraction(n * e - n * n, e)) if e else ExactBound(Fraction(0)),
            e >= 1,
            "",
        ),
    ]
    return BoundReport(n, e, delta, tuple(bounds))
