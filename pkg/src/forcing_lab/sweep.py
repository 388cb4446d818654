"""Exhaustive sweep driver: enumerate graph universes, verify each graph,
merge deterministic reports.

Determinism contract: the JSON report depends only on the sweep universe
and the verification config, never on the worker count.  Workers shard the
edge-mask space by fixed prefix; shard results are merged in shard order
and records are finally sorted by (graph6, theorem_id).  Wall time goes to
stderr, not into the report.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Optional

from . import __version__
from .errors import GraphError
from .graphs import Graph, _raw_graph, build_graph, graph6_decode, graph6_encode
from .matchings import has_perfect_matching
from .solver import DEFAULT_LIMITS, SolverLimits
from .verify import (
    ABORTED,
    COUNTEREXAMPLE,
    FAIL,
    INAPPLICABLE,
    PASS,
    VerdictRecord,
    record_csv_row,
    verify_graph,
)

SCHEMA_VERSION = 1

_SHARD_TARGET_BITS = 16  # at most 2**16 edge masks per shard

STATUSES = (PASS, FAIL, INAPPLICABLE, COUNTEREXAMPLE, ABORTED)


@dataclass(frozen=True)
class SweepConfig:
    mode: str  # "all_graphs" | "bipartite_balanced" | "stream"
    max_order: int = 6
    side: int = 3
    require_pm: bool = True
    workers: int = 1
    limits: SolverLimits = DEFAULT_LIMITS
    dedup: bool = False
    failures_only: bool = False
    strict_conjectures: bool = False
    stream_path: Optional[str] = None
    checkpoint: Optional[str] = None

    def fingerprint(self) -> str:
        """Identity of the sweep universe and verification config; worker
        count and output paths deliberately excluded."""
        return json.dumps(
            {
                "mode": self.mode,
                "max_order": self.max_order,
                "side": self.side,
                "require_pm": self.require_pm,
                "dedup": self.dedup,
                "failures_only": self.failures_only,
                "limits": [
                    self.limits.pm_limit,
                    self.limits.node_limit,
                    self.limits.cycle_limit,
                ],
                "stream_path": self.stream_path,
                "schema": SCHEMA_VERSION,
            },
            sort_keys=True,
        )


@dataclass
class Report:
    records: list[VerdictRecord]
    summary: dict
    environment: dict

    def to_json(self) -> str:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "environment": self.environment,
            "summary": self.summary,
            "records": [r.to_json_dict() for r in self.records],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"

    def write_csv(self, path: str) -> None:
        import csv

        from .verify import CSV_COLUMNS

        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for rec in self.records:
                writer.writerow(record_csv_row(rec))


# ---------------------------------------------------------------------------
# canonical form (optional dedup)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Lexicographically smallest upper-triangle column string over all
    vertex orderings (branch and bound over partial orderings)."""
    n = g.order
    best: list[Optional[tuple[int, ...]]] = [None]

    def columns_for(placed: list[int]) -> int:
        j = len(placed) - 1
        col = 0
        new = placed[-1]
        for i in range(j):
            col = (col << 1) | (1 if g.has_edge(placed[i], new) else 0)
        return col

    def rec(placed: list[int], cols: tuple[int, ...]):
        t = len(placed)
        if best[0] is not None and cols > best[0][: len(cols)]:
            return
        if t == n:
            if best[0] is None or cols < best[0]:
                best[0] = cols
            return
        for v in range(n):
            if v in placed:
                continue
            placed.append(v)
            rec(placed, cols + (columns_for(placed),) if t >= 1 else cols)
            placed.pop()

    rec([], ())
    assert best[0] is not None
    return best[0]


def canonical_graph6(g: Graph) -> str:
    cols = canonical_form(g)
    edges = []
    for j, col in enumerate(cols, start=1):
        for i in range(j):
            if (col >> (j - 1 - i)) & 1:
                edges.append((i, j))
    return graph6_encode(build_graph(g.order, edges))


def is_canonical_representative(g: Graph) -> bool:
    """True when the labeled graph equals its own canonical relabeling, so
    each isomorphism class keeps exactly one member under dedup."""
    return canonical_graph6(g) == graph6_encode(g)


# ---------------------------------------------------------------------------
# universes


def _all_pairs(order: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(order) for v in range(u + 1, order)]


def graph_from_edge_mask(order: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    rows = [0] * order
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _raw_graph(order, rows, edges)


def bipartite_graph_from_mask(side: int, mask: int) -> Graph:
    rows = [0] * (2 * side)
    for u in range(side):
        for v in range(side):
            if (mask >> (u * side + v)) & 1:
                rows[u] |= 1 << (side + v)
                rows[side + v] |= 1 << u
    return _raw_graph(2 * side, rows)


@dataclass(frozen=True)
class Shard:
    """A fixed slice of one enumeration space (prefix of the edge mask)."""

    kind: str  # "all_graphs" | "bipartite" | "stream"
    order: int
    prefix: int
    prefix_bits: int
    total_bits: int
    lines: tuple[str, ...] = ()


def _shards_for_masks(kind: str, order: int, total_bits: int) -> list[Shard]:
    prefix_bits = max(0, total_bits - _SHARD_TARGET_BITS)
    return [
        Shard(kind, order, prefix, prefix_bits, total_bits)
        for prefix in range(1 << prefix_bits)
    ]


def plan_shards(config: SweepConfig) -> list[Shard]:
    if config.mode == "all_graphs":
        shards = []
        for order in range(2, config.max_order + 1, 2):
            shards.extend(
                _shards_for_masks("all_graphs", order, len(_all_pairs(order)))
            )
        return shards
    if config.mode == "bipartite_balanced":
        return _shards_for_masks("bipartite", config.side, config.side**2)
    if config.mode == "stream":
        if config.stream_path is None:
            raise GraphError("stream mode needs a stream path")
        with open(config.stream_path) as fh:
            lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
        chunk = 64
        return [
            Shard("stream", 0, i, 0, 0, tuple(lines[i : i + chunk]))
            for i in range(0, len(lines), chunk)
        ]
    raise GraphError(f"unknown sweep mode {config.mode!r}")


def _shard_graphs(shard: Shard) -> Iterator[Graph]:
    if shard.kind == "stream":
        return  # handled separately (line parsing can fail)
    free_bits = shard.total_bits - shard.prefix_bits
    base = shard.prefix << free_bits
    if shard.kind == "all_graphs":
        pairs = _all_pairs(shard.order)
        for low in range(1 << free_bits):
            yield graph_from_edge_mask(shard.order, pairs, base | low)
    else:
        for low in range(1 << free_bits):
            yield bipartite_graph_from_mask(shard.order, base | low)


def run_shard(
    shard: Shard,
    require_pm: bool,
    dedup: bool,
    limits: SolverLimits,
    failures_only: bool,
) -> tuple[list[VerdictRecord], dict, int]:
    """Verify every graph of one shard; returns (kept records, status counts
    by theorem, graphs verified)."""
    counts: dict = {}
    kept: list[VerdictRecord] = []
    graphs = 0

    def consume(records: list[VerdictRecord]):
        nonlocal graphs
        graphs += 1
        for rec in records:
            slot = counts.setdefault(rec.theorem_id, dict.fromkeys(STATUSES, 0))
            slot[rec.status] += 1
            if not failures_only or rec.status in (FAIL, COUNTEREXAMPLE, ABORTED):
                kept.append(rec)

    if shard.kind == "stream":
        for line in shard.lines:
            try:
                g = graph6_decode(line)
            except GraphError as exc:
                consume(
                    [
                        VerdictRecord(
                            "INPUT", line, {}, "", None, ABORTED, "n/a", str(exc)
                        )
                    ]
                )
                continue
            if require_pm and not has_perfect_matching(g):
                consume(verify_graph(g, limits=limits))
                continue
            consume(verify_graph(g, limits=limits))
        return kept, counts, graphs

    for g in _shard_graphs(shard):
        if require_pm and not has_perfect_matching(g):
            continue
        if dedup and not is_canonical_representative(g):
            continue
        consume(verify_graph(g, limits=limits))
    return kept, counts, graphs


def _run_shard_star(args):
    shard, require_pm, dedup, limits, failures_only = args
    return run_shard(shard, require_pm, dedup, limits, failures_only)


def _merge_counts(into: dict, other: dict) -> None:
    for theorem_id, slot in other.items():
        target = into.setdefault(theorem_id, dict.fromkeys(STATUSES, 0))
        for status, cnt in slot.items():
            target[status] += cnt


# ---------------------------------------------------------------------------
# checkpointing (cursor only, records appended per completed shard)


def _checkpoint_paths(config: SweepConfig) -> tuple[str, str]:
    assert config.checkpoint is not None
    return config.checkpoint, config.checkpoint + ".records.jsonl"


def _load_checkpoint(config: SweepConfig) -> tuple[int, list[VerdictRecord], dict, int]:
    cursor_path, records_path = _checkpoint_paths(config)
    if not os.path.exists(cursor_path):
        return 0, [], {}, 0
    with open(cursor_path) as fh:
        state = json.load(fh)
    if state.get("fingerprint") != config.fingerprint():
        raise GraphError("checkpoint belongs to a different sweep config")
    records: list[VerdictRecord] = []
    counts: dict = {}
    graphs = 0
    with open(records_path) as fh:
        for line in fh:
            obj = json.loads(line)
            if "shard_counts" in obj:
                _merge_counts(counts, obj["shard_counts"])
                graphs += obj["shard_graphs"]
                continue
            records.append(
                VerdictRecord(
                    obj["theorem_id"],
                    obj["graph_id"],
                    obj["inputs"],
                    obj["bound"],
                    obj["observed"],
                    obj["status"],
                    obj["equality_case"],
                    obj["detail"],
                )
            )
    return int(state["completed_shards"]), records, counts, graphs


def _append_checkpoint(
    config: SweepConfig,
    completed: int,
    records: list[VerdictRecord],
    counts: dict,
    graphs: int,
) -> None:
    cursor_path, records_path = _checkpoint_paths(config)
    with open(records_path, "a") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json_dict(), sort_keys=True) + "\n")
        fh.write(
            json.dumps({"shard_counts": counts, "shard_graphs": graphs}) + "\n"
        )
    tmp = cursor_path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(
            {
                "schema_version": SCHEMA_VERSION,
                "fingerprint": config.fingerprint(),
                "completed_shards": completed,
            },
            fh,
        )
    os.replace(tmp, cursor_path)


# ---------------------------------------------------------------------------
# driver


def run_sweep(config: SweepConfig) -> Report:
    shards = plan_shards(config)
    start_shard = 0
    records: list[VerdictRecord] = []
    counts: dict = {}
    graphs = 0
    if config.checkpoint:
        start_shard, records, counts, graphs = _load_checkpoint(config)
    todo = shards[start_shard:]
    args = [
        (shard, config.require_pm, config.dedup, config.limits, config.failures_only)
        for shard in todo
    ]
    completed = start_shard
    if config.workers <= 1 or not todo:
        results: Iterable = map(_run_shard_star, args)
        for shard_records, shard_counts, shard_graphs in results:
            records.extend(shard_records)
            _merge_counts(counts, shard_counts)
            graphs += shard_graphs
            completed += 1
            if config.checkpoint:
                _append_checkpoint(
                    config, completed, shard_records, shard_counts, shard_graphs
                )
    else:
        with multiprocessing.Pool(config.workers) as pool:
            for shard_records, shard_counts, shard_graphs in pool.imap(
                _run_shard_star, args
            ):
                records.extend(shard_records)
                _merge_counts(counts, shard_counts)
                graphs += shard_graphs
                completed += 1
                if config.checkpoint:
                    _append_checkpoint(
                        config, completed, shard_records, shard_counts, shard_graphs
                    )
    return build_report(config, records, counts, graphs)


def build_report(
    config: SweepConfig,
    records: list[VerdictRecord],
    counts: dict,
    graphs: int,
) -> Report:
    records = sorted(records, key=lambda r: (r.graph_id, r.theorem_id))
    totals = dict.fromkeys(STATUSES, 0)
    for slot in counts.values():
        for status, cnt in slot.items():
            totals[status] += cnt
    summary = {
        "by_theorem": {tid: dict(slot) for tid, slot in sorted(counts.items())},
        "totals": totals,
        "graphs_verified": graphs,
        "counterexamples_found": totals[COUNTEREXAMPLE] > 0,
    }
    environment = {
        "package": "forcing-lab",
        "version": __version__,
        "schema_version": SCHEMA_VERSION,
        "config": {
            "mode": config.mode,
            "max_order": config.max_order,
            "side": config.side,
            "require_pm": config.require_pm,
            "dedup": config.dedup,
            "failures_only": config.failures_only,
            "limits": {
                "pm_limit": config.limits.pm_limit,
                "node_limit": config.limits.node_limit,
                "cycle_limit": config.limits.cycle_limit,
            },
        },
    }
    return Report(records, summary, environment)


def verify_stream(path: str, config: SweepConfig) -> Report:
    return run_sweep(replace(config, mode="stream", stream_path=path))
