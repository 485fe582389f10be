"""Exact isoperimetric profiles, peaks, h-index machinery, and bound rules.

The profile enumerator sweeps every vertex subset in Gray-code order so a
single vertex toggles between consecutive subsets; vertex- and edge-boundary
sizes are maintained incrementally in O(degree) per step.  On top of the
profiles sit the h-index, the arithmetic lower-bound formulas, and the
assembled per-graph bounds report.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bitset import iter_bits
from .errors import InconsistentBoundsError, PartialProfileError, SizeCapError
from .graphs import Graph, is_c4_free, max_degree

DEFAULT_ISO_CAP = 25


@dataclass(frozen=True)
class IsoProfile:
    """Boundary minima Phi(G, k) for k = 1..n.

    ``values[k-1]`` is the minimum boundary size over k-subsets; the
    matching ``exact`` flag is False when enumeration was truncated and the
    entry is only the minimum over the subsets actually examined.
    """

    mode: str  # "vertex" | "edge"
    values: tuple[int, ...]
    exact: tuple[bool, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def fully_exact(self) -> bool:
        return all(self.exact)

    def value(self, k: int) -> int:
        return self.values[k - 1]


def _scan_gray(
    adj: Sequence[int],
    nbrs: Sequence[Sequence[int]],
    degs: Sequence[int],
    fixed_bits: int,
    free: Sequence[int],
    best_v: list[int],
    best_e: list[int],
    budget: int | None,
) -> bool:
    """Walk all subsets = fixed_bits + (subset of ``free``), Gray order.

    Updates per-cardinality minima in place.  Returns False when the budget
    ran out before the walk finished.
    """
    n = len(adj)
    counts = [0] * n  # neighbors inside S, for every vertex
    in_s = fixed_bits
    size = fixed_bits.bit_count()
    vb = 0
    eb = 0
    for v in iter_bits(fixed_bits):
        for w in nbrs[v]:
            counts[w] += 1
    for v in range(n):
        if (in_s >> v) & 1:
            eb += degs[v] - counts[v]
        elif counts[v]:
            vb += 1
    if size:
        if vb < best_v[size]:
            best_v[size] = vb
        if eb < best_e[size]:
            best_e[size] = eb

    examined = 0
    k = len(free)
    for t in range(1, 1 << k):
        if budget is not None and examined >= budget:
            return False
        examined += 1
        v = free[(t & -t).bit_length() - 1]
        bit = 1 << v
        if in_s & bit:  # remove v
            in_s &= ~bit
            size -= 1
            eb -= degs[v] - 2 * counts[v]
            for w in nbrs[v]:
                counts[w] -= 1
                if not (in_s >> w) & 1 and counts[w] == 0:
                    vb -= 1
            if counts[v]:
                vb += 1
        else:  # add v
            if counts[v]:
                vb -= 1
            in_s |= bit
            size += 1
            eb += degs[v] - 2 * counts[v]
            for w in nbrs[v]:
                counts[w] += 1
                if not (in_s >> w) & 1 and counts[w] == 1:
                    vb += 1
        if vb < best_v[size]:
            best_v[size] = vb
        if eb < best_e[size]:
            best_e[size] = eb
    return True


def _profile_job(args):
    adj, fixed_bits, free = args
    n = len(adj)
    nbrs = [tuple(iter_bits(row)) for row in adj]
    degs = [row.bit_count() for row in adj]
    best_v = [n + 1] * (n + 1)
    best_e = [4 * n * n] * (n + 1)
    _scan_gray(adj, nbrs, degs, fixed_bits, free, best_v, best_e, None)
    return best_v, best_e


def _profiles_both(
    g: Graph, budget: int | None, workers: int
) -> tuple[IsoProfile, IsoProfile, bool]:
    n = g.n
    adj = g.adj_bits
    best_v = [n + 1] * (n + 1)
    best_e = [4 * n * n] * (n + 1)
    complete = True
    if workers <= 1 or n < 8:
        nbrs = [tuple(iter_bits(row)) for row in adj]
        degs = [row.bit_count() for row in adj]
        complete = _scan_gray(adj, nbrs, degs, 0, list(range(n)), best_v, best_e, budget)
    else:
        # partition by fixed prefix on the top bits; min-reduction commutes
        width = max(1, (workers - 1).bit_length())
        top = list(range(n - width, n))
        free = list(range(n - width))
        jobs = [
            (adj, sum(1 << top[i] for i in range(width) if (p >> i) & 1), free)
            for p in range(1 << width)
        ]
        with multiprocessing.Pool(workers) as pool:
            for jv, je in pool.map(_profile_job, jobs):
                for k in range(n + 1):
                    best_v[k] = min(best_v[k], jv[k])
                    best_e[k] = min(best_e[k], je[k])

    exact = tuple([complete] * n)
    prof_v = IsoProfile("vertex", tuple(best_v[1:]), exact)
    prof_e = IsoProfile("edge", tuple(best_e[1:]), exact)
    return prof_v, prof_e, complete


_profile_cache: dict[tuple[str, int | None], tuple[IsoProfile, IsoProfile]] = {}


def iso_profile(
    g: Graph,
    mode: str,
    *,
    budget: int | None = None,
    cap: int = DEFAULT_ISO_CAP,
    workers: int = 1,
) -> IsoProfile:
    """Exact Phi(G, k) for all k by full subset enumeration.

    A spent budget yields a partial profile whose entries are flagged
    inexact (each is only the minimum over the subsets examined); peak and
    h-index computations refuse such profiles.
    """
    if mode not in ("vertex", "edge"):
        raise ValueError("mode must be 'vertex' or 'edge'")
    if g.n > cap:
        raise SizeCapError("isoperimetric enumeration", g.n, cap)
    key = (g.content_hash(), budget)
    if key not in _profile_cache:
        prof_v, prof_e, _ = _profiles_both(g, budget, workers)
        _profile_cache[key] = (prof_v, prof_e)
    return _profile_cache[key][0 if mode == "vertex" else 1]


def iso_peak(profile: IsoProfile) -> int:
    """max_k Phi(G, k); demands a fully exact profile."""
    if not profile.fully_exact():
        raise PartialProfileError("peak requires every profile entry exact")
    return max(profile.values)


def h_index(values: Sequence[int]) -> int:
    """Largest h with h consecutive entries all >= h (0 when none).

    The window must lie inside the sequence domain; an all-zero sequence
    has no feasible window and yields 0.
    """
    if not values:
        raise ValueError("h_index needs a nonempty sequence")
    n = len(values)
    for h in range(min(n, max(values)), 0, -1):
        run = 0
        for x in values:
            run = run + 1 if x >= h else 0
            if run >= h:
                return h
    return 0


def h_index_graph(g: Graph, mode: str, *, cap: int = DEFAULT_ISO_CAP) -> int:
    profile = iso_profile(g, mode, cap=cap)
    if not profile.fully_exact():
        raise PartialProfileError("h-index requires an exact profile")
    return h_index(profile.values)


def prox_lower_bounds(
    h_vertex: int | None, h_edge: int | None, delta: int
) -> dict[str, int]:
    """Integer consequences of the strict h-index bounds on prox1.

    prox1 > H_V/(Delta+1) and prox1 > H_E/((Delta+1)*Delta) become
    floor(x)+1 since prox1 is an integer.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    out: dict[str, int] = {}
    if h_vertex is not None:
        out["from_vertex_h"] = h_vertex // (delta + 1) + 1
    if h_edge is not None:
        out["from_edge_h"] = h_edge // ((delta + 1) * delta) + 1
    return out


def peak_to_h_lower(phi_peak: int, delta: int, mode: str) -> int:
    """Lower bound on the h-index from the matching isoperimetric peak.

    The adjacent-entry shift bounds pin a window around the peak whose
    entries stay large; the window supports h = floor of the balanced
    threshold (vertex: Phi*(Delta+1)/(2*Delta+1), edge: 2*Phi/(Delta+2)).
    The unrounded threshold itself is not a valid bound: at peaks sitting
    at k = 1 with steeply falling profiles (triangles, complete graphs)
    the integer window is one shorter than the real-valued count suggests.
    """
    if phi_peak < 0 or delta < 1:
        raise ValueError("phi_peak must be >= 0 and delta >= 1")
    if mode == "vertex":
        return phi_peak * (delta + 1) // (2 * delta + 1)
    if mode == "edge":
        return 2 * phi_peak // (delta + 2)
    raise ValueError("mode must be 'vertex' or 'edge'")


def grid_profile_oracle(n: int) -> tuple[int, int, int]:
    """Closed-form middle window of the n-by-n grid vertex profile.

    Returns (k_lo, k_hi, n): Phi_V equals n on every k in [k_lo, k_hi],
    a run of 2n-2 consecutive entries.
    """
    if n < 2:
        raise ValueError("grid oracle needs n >= 2")
    k_lo = (n * n - 3 * n + 4) // 2
    k_hi = (n * n + n - 2) // 2
    return k_lo, k_hi, n


@dataclass(frozen=True)
class KaryBoundReport:
    """Formula-level lower/upper bounds for the k-ary tree of depth d."""

    k: int
    d: int
    lower_rational: Fraction
    lower_integer: int
    upper: int
    asymptotic_note: str | None

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "lower_rational": str(self.lower_rational),
            "lower_integer": self.lower_integer,
            "upper": self.upper,
            "asymptotic_note": self.asymptotic_note,
        }


def kary_bound_report(k: int, d: int) -> KaryBoundReport:
    """Instantiate the depth-based bounds on prox1 of the k-ary tree.

    The strict rational lower bound (3/80)(d-2)(2/(2k+3)) is reported
    exactly together with its integer consequence; the upper bound is
    floor(d/4)+2.  For binary trees the sharper asymptotic lower bound has
    a hidden constant, so it is surfaced as text only.
    """
    if k < 2 or d < 2:
        raise ValueError("kary bounds need k >= 2 and d >= 2")
    lower = Fraction(3, 80) * (d - 2) * Fraction(2, 2 * k + 3)
    note = None
    if k == 2:
        note = (
            "binary trees also satisfy d/60 - O(log d) < prox1; the hidden "
            "constant is not computable, so only the symbolic form is reported"
        )
    return KaryBoundReport(
        k=k,
        d=d,
        lower_rational=lower,
        lower_integer=int(lower) + 1,
        upper=d // 4 + 2,
        asymptotic_note=note,
    )


@dataclass(frozen=True)
class DerivedBound:
    target: str  # "prox1" | "zeta1"
    kind: str  # "lower" | "upper"
    value: int
    rule: str

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "kind": self.kind,
            "value": self.value,
            "rule": self.rule,
        }


@dataclass
class BoundsReport:
    """Every applicable inequality instantiated for one graph."""

    graph_id: str
    n: int
    m: int
    max_degree: int
    quantities: dict
    bounds: list[DerivedBound] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def best(self, target: str) -> tuple[int | None, int | None]:
        lowers = [b.value for b in self.bounds if b.target == target and b.kind == "lower"]
        uppers = [b.value for b in self.bounds if b.target == target and b.kind == "upper"]
        return (max(lowers) if lowers else None, min(uppers) if uppers else None)

    def as_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "quantities": {k: v for k, v in sorted(self.quantities.items())},
            "bounds": [b.as_dict() for b in self.bounds],
            "notes": list(self.notes),
            "best": {
                t: {"lower": lo, "upper": hi}
                for t in ("prox1", "zeta1")
                for lo, hi in [self.best(t)]
            },
        }


def assemble_bounds(
    g: Graph,
    *,
    graph_id: str = "",
    prox1: int | None = None,
    zeta1: int | None = None,
    h_vertex: int | None = None,
    h_edge: int | None = None,
    phi_vertex_peak: int | None = None,
    phi_edge_peak: int | None = None,
    pathwidth: int | None = None,
    domination_number: int | None = None,
    grid_side: int | None = None,
) -> BoundsReport:
    """Chain every applicable inequality through the known quantities.

    A lower bound exceeding an upper bound for the same target is a hard
    inconsistency and raises instead of being clamped.
    """
    delta = max_degree(g) if g.n > 1 else 0
    quantities = {
        k: v
        for k, v in {
            "prox1": prox1,
            "zeta1": zeta1,
            "h_vertex": h_vertex,
            "h_edge": h_edge,
            "phi_vertex_peak": phi_vertex_peak,
            "phi_edge_peak": phi_edge_peak,
            "pathwidth": pathwidth,
            "domination_number": domination_number,
            "grid_side": grid_side,
        }.items()
        if v is not None
    }
    report = BoundsReport(
        graph_id=graph_id or g.content_hash(),
        n=g.n,
        m=g.edge_count(),
        max_degree=delta,
        quantities=quantities,
    )
    add = report.bounds.append

    if g.n > 1:
        add(DerivedBound("zeta1", "upper", g.n - 1, "order-cap"))
    tree = g.is_tree()

    if prox1 is not None:
        add(DerivedBound("zeta1", "lower", prox1, "relaxation-order"))
        add(DerivedBound("zeta1", "upper", delta * prox1, "degree-lift"))
        if delta >= 1 and prox1 >= delta * delta:
            add(DerivedBound("zeta1", "upper", prox1, "large-proximity-equality"))
        if tree:
            add(DerivedBound("zeta1", "upper", prox1 + 1, "tree-gap-one"))
            if prox1 >= delta:
                add(DerivedBound("zeta1", "upper", prox1, "tree-degree-equality"))
    if zeta1 is not None:
        add(DerivedBound("prox1", "upper", zeta1, "relaxation-order"))
    if pathwidth is not None:
        add(DerivedBound("zeta1", "upper", pathwidth, "pathwidth-sweep"))
    if domination_number is not None and is_c4_free(g):
        add(
            DerivedBound(
                "zeta1", "upper", domination_number + delta, "domination-c4free"
            )
        )
    if delta >= 1:
        if h_vertex is not None:
            add(
                DerivedBound(
                    "prox1",
                    "lower",
                    prox_lower_bounds(h_vertex, None, delta)["from_vertex_h"],
                    "h-index-vertex",
                )
            )
        if h_edge is not None:
            add(
                DerivedBound(
                    "prox1",
                    "lower",
                    prox_lower_bounds(None, h_edge, delta)["from_edge_h"],
                    "h-index-edge",
                )
            )
        if phi_vertex_peak is not None and h_vertex is None:
            hv = peak_to_h_lower(phi_vertex_peak, delta, "vertex")
            add(
                DerivedBound(
                    "prox1",
                    "lower",
                    prox_lower_bounds(hv, None, delta)["from_vertex_h"],
                    "peak-chain-vertex",
                )
            )
        if phi_edge_peak is not None and h_edge is None:
            he = peak_to_h_lower(phi_edge_peak, delta, "edge")
            add(
                DerivedBound(
                    "prox1",
                    "lower",
                    prox_lower_bounds(None, he, delta)["from_edge_h"],
                    "peak-chain-edge",
                )
            )
    if grid_side is not None:
        lo = -(-grid_side // 5) + 1
        add(DerivedBound("prox1", "lower", lo, "grid-window"))
        add(DerivedBound("prox1", "upper", lo + 3, "grid-window"))
        if grid_side >= 11:
            add(DerivedBound("zeta1", "lower", lo, "grid-window-localization"))
            add(DerivedBound("zeta1", "upper", lo + 3, "grid-window-localization"))
    report.notes.append(
        "asymptotic separator and binary-tree statements carry hidden "
        "constants and are never instantiated numerically"
    )

    for target in ("prox1", "zeta1"):
        lo, hi = report.best(target)
        if lo is not None and hi is not None and lo > hi:
            raise InconsistentBoundsError(
                f"{target}: derived lower bound {lo} exceeds upper bound {hi}"
            )
    return report


def profile_to_csv(profile: IsoProfile) -> str:
    lines = ["k,phi,exact"]
    for k, (phi, exact) in enumerate(zip(profile.values, profile.exact), start=1):
        lines.append(f"{k},{phi},{'true' if exact else 'false'}")
    return "\n".join(lines) + "\n"
