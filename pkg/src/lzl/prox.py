"""Contamination dynamics and the exact one-proximity solver.

The single-player view of the one-proximity game: the robber territory S
spreads to its closed neighborhood each round and loses everything within
distance one of a probe.  A schedule wins exactly when S reaches the empty
set, independent of any robber choices, so verification is a pure set
recursion and the optimal cop count is a reachability question over subset
states.

Round indexing makes round-1 probes effective: S_1 = V minus N[V_1].  The
literal recursion with S_1 = V(G) is the same game shifted by one wasted
round and leaves the optimal cop count unchanged.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .bitset import VertexSet, iter_bits, mask_of
from .errors import ScheduleError, SizeCapError
from .graphs import Graph, closed_nb_bits

DEFAULT_PROX_CAP = 16


@dataclass(frozen=True)
class ProbeSchedule:
    """Non-adaptive cop plan: a declared budget and per-round probe sets."""

    cops: int
    rounds: tuple[frozenset[int], ...]
    mode: str = "prox"
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.cops < 1:
            raise ScheduleError("cop budget must be positive")
        for t, r in enumerate(self.rounds, start=1):
            if len(r) > self.cops:
                raise ScheduleError(
                    f"round {t} probes {len(r)} vertices, budget is {self.cops}"
                )

    @classmethod
    def from_lists(cls, cops: int, rounds: Iterable[Iterable[int]], **kw):
        return cls(cops, tuple(frozenset(r) for r in rounds), **kw)

    def validate_for(self, g: Graph) -> None:
        for t, r in enumerate(self.rounds, start=1):
            for v in r:
                if not 0 <= v < g.n:
                    raise ScheduleError(f"round {t} probes vertex {v} out of range")

    def to_json(self) -> str:
        return json.dumps(
            {
                "mode": self.mode,
                "cops": self.cops,
                "rounds": [sorted(v + 1 for v in r) for r in self.rounds],
                "metadata": self.metadata,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "ProbeSchedule":
        data = json.loads(text)
        return cls.from_lists(
            data["cops"],
            [[v - 1 for v in r] for r in data["rounds"]],
            mode=data.get("mode", "prox"),
            metadata=data.get("metadata", {}),
        )


@dataclass(frozen=True)
class ContaminationState:
    contaminated: VertexSet
    round: int


@dataclass
class ScheduleTrace:
    """Outcome of running a schedule: verdict plus per-round diagnostics."""

    cleared: bool
    clear_round: int | None
    counts: list[int]
    max_contamination: int
    first_recontamination_round: int | None
    final_bits: int
    states: list[int] | None = None  # per-round masks, kept on small graphs

    def contaminated_after(self, t: int) -> int:
        return self.counts[t - 1]


def contamination_step(g: Graph, s: VertexSet, u: VertexSet) -> VertexSet:
    """One round: spread S to N[S], then clear N[U]."""
    return VertexSet(g.n, step_bits(g, s.bits, u.bits))


def step_bits(g: Graph, s_bits: int, u_bits: int) -> int:
    return closed_nb_bits(g, s_bits) & ~closed_nb_bits(g, u_bits)


def run_schedule(
    g: Graph,
    schedule: ProbeSchedule,
    *,
    initial: VertexSet | None = None,
    keep_states: bool | None = None,
) -> ScheduleTrace:
    """Run the contamination recursion from S = V(G) (or ``initial``).

    Large graphs are handled incrementally: the spread frontier is
    maintained through per-vertex inside-neighbor counts so each round
    costs O(changed vertices * degree) instead of O(|S| * degree).
    """
    if schedule.mode != "prox":
        raise ScheduleError("run_schedule verifies prox-mode schedules")
    schedule.validate_for(g)
    n = g.n
    adj = g.adj_bits
    full = (1 << n) - 1
    s = initial.bits if initial is not None else full
    if keep_states is None:
        keep_states = n <= 64

    counts = [0] * n  # neighbors currently contaminated, per vertex
    for v in iter_bits(s):
        for w in iter_bits(adj[v]):
            counts[w] += 1
    fringe = 0  # clean vertices with a contaminated neighbor
    for v in range(n):
        if not (s >> v) & 1 and counts[v]:
            fringe |= 1 << v

    trace_counts: list[int] = []
    states: list[int] | None = [] if keep_states else None
    cleared = False
    clear_round = None
    recontam_round = None
    max_contam = s.bit_count()

    for t, probes in enumerate(schedule.rounds, start=1):
        probe_nb = 0
        for v in probes:
            probe_nb |= adj[v] | (1 << v)
        spread = s | fringe
        new_s = spread & ~probe_nb

        added = new_s & ~s
        removed = s & ~new_s
        if added and recontam_round is None:
            recontam_round = t
        changed = added | removed
        if changed:
            touched = changed
            for v in iter_bits(added):
                for w in iter_bits(adj[v]):
                    counts[w] += 1
                touched |= adj[v]
            for v in iter_bits(removed):
                for w in iter_bits(adj[v]):
                    counts[w] -= 1
                touched |= adj[v]
            s = new_s
            for v in iter_bits(touched):
                if not (s >> v) & 1 and counts[v]:
                    fringe |= 1 << v
                else:
                    fringe &= ~(1 << v)
        size = s.bit_count()
        trace_counts.append(size)
        if states is not None:
            states.append(s)
        max_contam = max(max_contam, size)
        if size == 0 and not cleared:
            cleared = True
            clear_round = t

    return ScheduleTrace(
        cleared=cleared,
        clear_round=clear_round,
        counts=trace_counts,
        max_contamination=max_contam,
        first_recontamination_round=recontam_round,
        final_bits=s,
        states=states,
    )


def trace_to_json(trace: ScheduleTrace) -> str:
    return json.dumps(
        {
            "cleared": trace.cleared,
            "clear_round": trace.clear_round,
            "per_round_contaminated": trace.counts,
            "max_contamination": trace.max_contamination,
            "first_recontamination_round": trace.first_recontamination_round,
        },
        sort_keys=True,
    )


def _probe_candidates(g: Graph, territory: int) -> list[int]:
    """Vertices worth probing against the spread territory.

    A vertex is dropped when its in-territory clearing set is contained in
    another candidate's: replacing the dominated probe by the dominating
    one never shrinks the cleared set, so the filter is lossless.
    """
    n = g.n
    keys: list[tuple[int, int]] = []
    for v in range(n):
        k = (g.adj_bits[v] | (1 << v)) & territory
        if k:
            keys.append((v, k))
    out = []
    for v, k in keys:
        dominated = False
        for w, k2 in keys:
            if w == v:
                continue
            if k & ~k2 == 0 and (k != k2 or w < v):
                dominated = True
                break
        if not dominated:
            out.append(v)
    return out


def _subsets_upto(items: Sequence[int], p: int) -> list[int]:
    """Nonempty subsets of ``items`` of size <= p, as bitmasks over vertices."""
    out: list[int] = []
    for size in range(1, min(p, len(items)) + 1):
        for combo in combinations(items, size):
            out.append(mask_of(combo))
    return out


def prox_winnable(
    g: Graph,
    p: int,
    *,
    cap: int = DEFAULT_PROX_CAP,
    want_witness: bool = True,
    prune_dominated: bool = False,
) -> tuple[bool, ProbeSchedule | None]:
    """Decide whether p cops clear the graph; optionally return a witness.

    Breadth-first reachability over territory masks from V(G) to the empty
    set.  ``prune_dominated`` additionally skips any newly found territory
    that is a superset of one already expanded; this preserves winnability
    (clearing a subset is never harder) but is kept off by default so
    witnesses are plainly round-minimal.
    """
    if g.n > cap:
        raise SizeCapError("exact prox solver", g.n, cap)
    if p < 1:
        return False, None
    n = g.n
    full = (1 << n) - 1
    adj = g.adj_bits
    nb_closed = [adj[v] | (1 << v) for v in range(n)]

    start = full
    parent: dict[int, tuple[int, int] | None] = {start: None}
    frontier = deque([start])
    goal_found = start == 0
    expanded_by_size: dict[int, list[int]] = {}

    while frontier and not goal_found:
        s = frontier.popleft()
        territory = closed_nb_bits(g, s)
        cands = _probe_candidates(g, territory)
        subsets = _subsets_upto(cands, min(p, len(cands)))
        for u_mask in subsets:
            probe_nb = 0
            for v in iter_bits(u_mask):
                probe_nb |= nb_closed[v]
            t = territory & ~probe_nb
            if t in parent:
                continue
            if prune_dominated:
                skip = False
                for size, seen in expanded_by_size.items():
                    if size <= t.bit_count():
                        for other in seen:
                            if other & ~t == 0:
                                skip = True
                                break
                    if skip:
                        break
                if skip:
                    continue
            parent[t] = (s, u_mask)
            if t == 0:
                goal_found = True
                break
            frontier.append(t)
        expanded_by_size.setdefault(s.bit_count(), []).append(s)

    if not goal_found:
        return False, None
    if not want_witness:
        return True, None
    rounds: list[set[int]] = []
    cur = 0
    while parent[cur] is not None:
        prev, u_mask = parent[cur]
        rounds.append(set(iter_bits(u_mask)))
        cur = prev
    rounds.reverse()
    witness = ProbeSchedule.from_lists(p, rounds, metadata={"solver": "bfs"})
    return True, witness


def prox_number(g: Graph, *, cap: int = DEFAULT_PROX_CAP) -> int:
    """Minimum cop count clearing the graph; 0 for the one-vertex graph.

    The one-vertex convention keeps prox1 <= zeta1 alongside zeta1(K1) = 0.
    """
    if g.n == 1:
        return 0
    for p in range(1, g.n + 1):
        won, _ = prox_winnable(g, p, cap=cap, want_witness=False)
        if won:
            return p
    raise AssertionError("unreachable: probing everything always clears")
