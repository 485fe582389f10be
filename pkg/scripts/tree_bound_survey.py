#!/usr/bin/env python3
"""Survey the three tree upper bounds against verified strategy budgets.

For k-ary trees (optionally subdivided) this prints, per tree: the order
bound ceil(log2 n), the depth bound floor(d/4)+2, the level bound
ceil(max nonleaf-per-level / 3)+1, and the mechanically verified cop
budgets of the depth and level schedules.

Usage: python scripts/tree_bound_survey.py [k d [subdivide]] ...
Default survey: kary(3,3) with subdivisions 0, 10, 100.
"""

import sys

from lzl import generate, level_decomposition, strat_tree_depth, strat_tree_levels, subdivide
from lzl.prox import run_schedule


def survey(k: int, d: int, sub: int) -> None:
    g = subdivide(generate("kary", k=k, d=d), sub)
    depth = max(g.label(v, "depth") for v in range(g.n))
    ld = level_decomposition(g, 0)
    order_bound = (g.n - 1).bit_length()
    depth_bound = depth // 4 + 2
    level_bound = -(-ld.max_nonleaf // 3) + 1

    sched_d = strat_tree_depth(g, 0)
    ok_d = run_schedule(g, sched_d, keep_states=False).cleared
    sched_l = strat_tree_levels(g, 0)
    ok_l = run_schedule(g, sched_l, keep_states=False).cleared

    print(
        f"kary({k},{d})+sub{sub}: n={g.n} depth={depth} | "
        f"order {order_bound}, depth {depth_bound}, levels {level_bound} | "
        f"depth-schedule {sched_d.cops} cops ({'ok' if ok_d else 'FAIL'}), "
        f"level-schedule {sched_l.cops} cops ({'ok' if ok_l else 'FAIL'})"
    )


def main() -> int:
    args = [int(a) for a in sys.argv[1:]]
    if args:
        groups = [args[i : i + 3] for i in range(0, len(args), 3)]
        for grp in groups:
            k, d = grp[0], grp[1]
            survey(k, d, grp[2] if len(grp) > 2 else 0)
    else:
        for sub in (0, 10, 100):
            survey(3, 3, sub)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
