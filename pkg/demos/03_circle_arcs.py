"""Balanced subsets of circle points using at most two arcs.

Take 3n points on a circle, n of each color.  For every k from 1 to n some
subset of at most two disjoint closed arcs contains exactly k points of
each color.  The construction composes two moves: halve (cut the current
point set's count in half, keeping the arc budget via a moment argument)
and complement.  A short op word over {f, g} reaches any k.
"""

import pathlib

from tricut import (
    Color,
    GenKind,
    GenSpec,
    arcset_color_counts,
    find_k_arcset,
    generate,
    plan_ops,
    svg,
)
from tricut.arcs import bfs_shortest
from tricut.oracles import arcset_points_key, enumerate_2arc_sets

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)


def main():
    n, k, seed = 6, 4, 3
    print(f"op plan for n={n}: reach every k by halving (f) and complementing (g)")
    for kk in range(1, n + 1):
        plan = plan_ops(n, kk)
        word = "".join(plan.ops) or "(empty)"
        print(f"  k={kk}: {word:18s} counts path {plan.counts_path()}"
              f"  bfs {bfs_shortest(n, kk)}")

    points = generate(GenSpec(GenKind.CirclePoints3C, n, seed))
    a = find_k_arcset(points, k)
    counts = arcset_color_counts(a, points)
    print(f"arc set for k={k}: {[(str(lo), str(hi)) for lo, hi in a.arcs]}")
    print(f"  components {a.component_count()}, counts (R,G,B) "
          f"{tuple(counts[c] for c in (Color.R, Color.G, Color.B))}")
    assert a.component_count() <= 2

    # independent enumeration of all at-most-2-arc answers
    all_answers = enumerate_2arc_sets(points, k)
    keys = {arcset_points_key(x, points) for x in all_answers}
    assert arcset_points_key(a, points) in keys
    print(f"  one of {len(keys)} distinct at-most-2-arc point subsets with this balance")

    (OUT / "arcs.svg").write_text(svg.render_arcset(points, a))
    print(f"wrote {OUT / 'arcs.svg'}")


if __name__ == "__main__":
    main()
