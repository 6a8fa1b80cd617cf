"""Balanced double wedges, two ways.

A double wedge is the region between two crossing lines (one opposite
sector pair).  For any 3-colored point set in general position there is a
double wedge containing exactly one point of each color; for 6n points
with 2n per color there is one containing exactly n of each.  The first
comes from dualizing to a line arrangement and walking into a complete
cell, the second from a slope sweep.  Both answers are checked against a
brute-force enumeration and against crossing counts of the dual segment.
"""

import pathlib

from tricut import (
    Color,
    GenKind,
    GenSpec,
    brute_oracle_wedges,
    dual_point_to_line,
    find_111_wedge,
    generate,
    svg,
    sweep_balanced_wedge,
    wedge_color_counts,
    wedge_dual_segment,
    wedge_point_indices,
)
from tricut.oracles import count_segment_crossings

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)


RGB = (Color.R, Color.G, Color.B)


def show(tag, w, points):
    counts = wedge_color_counts(w, points)
    inside = wedge_point_indices(w, points)
    print(f"{tag}: apex ({w.apex[0]}, {w.apex[1]}), sector {w.sector}")
    print(f"  contains points {inside}, counts (R,G,B) "
          f"{tuple(counts[c] for c in RGB)}")
    return inside


def main():
    # one of each color among 11 points
    points = generate(GenSpec(GenKind.Points3C, 11, seed=14))
    w = find_111_wedge(points)
    inside = show("(1,1,1) wedge", w, points)
    assert inside in brute_oracle_wedges(points, (1, 1, 1))

    # the dual segment crosses exactly the lines dual to contained points
    seg = wedge_dual_segment(w)
    crossings = count_segment_crossings(seg, [dual_point_to_line(p) for p in points])
    print(f"  dual segment crossings (R,G,B): {tuple(crossings[c] for c in RGB)}")

    (OUT / "wedge_111.svg").write_text(svg.render_wedge(points, w))

    # n of each color among 6n points, n = 2
    balanced = generate(GenSpec(GenKind.Points3CConvex, 2, seed=14))
    w2 = sweep_balanced_wedge(balanced)
    inside2 = show("(2,2,2) wedge", w2, balanced)
    assert inside2 in brute_oracle_wedges(balanced, (2, 2, 2))

    (OUT / "wedge_222.svg").write_text(svg.render_wedge(balanced, w2))
    print(f"wrote {OUT / 'wedge_111.svg'} and {OUT / 'wedge_222.svg'}")


if __name__ == "__main__":
    main()
