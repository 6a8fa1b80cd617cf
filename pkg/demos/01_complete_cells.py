"""Complete cells in colored line arrangements.

Every simple arrangement of lines in three colors (at least one line each)
has a bounded cell whose boundary carries all three colors with all three
bichromatic parities odd.  This script finds one incrementally, checks it
against the exhaustive scan, and draws the arrangement.
"""

import pathlib

from tricut import (
    Color,
    GenKind,
    GenSpec,
    build_arrangement,
    cycle_parity,
    find_complete_face,
    gen_shielded_counterexample,
    generate,
    is_complete,
    scan_all_complete_faces,
    svg,
)

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)


def main():
    lines = generate(GenSpec(GenKind.SimpleLines3C, 9, seed=20))
    face = find_complete_face(lines)
    print(f"arrangement of {len(lines)} lines, colors "
          f"{''.join(l.color.value for l in lines)}")
    print(f"complete face: {len(face.vertices)} vertices, "
          f"boundary colors {''.join(c.value for c in face.boundary_colors)}")
    print(f"bichromatic parities (RG, GB, BR): {cycle_parity(face.boundary_colors)}")
    assert is_complete(face)

    arr = build_arrangement(lines)
    complete = scan_all_complete_faces(arr)
    print(f"exhaustive scan: {len(complete)} of {len(arr.faces)} faces complete")
    assert any(set(f.vertices) == set(face.vertices) for f in complete)

    path = OUT / "complete_cell.svg"
    path.write_text(svg.render_arrangement(arr, face))
    print(f"wrote {path}")

    # with a fourth color the guarantee evaporates: a shielded 9-line
    # arrangement where no cell sees all four colors
    shielded = gen_shielded_counterexample()
    arr4 = build_arrangement(shielded)
    four = scan_all_complete_faces(arr4, required=set(Color))
    print(f"4-color shielded arrangement: {len(four)} cells with all four colors")
    assert four == []


if __name__ == "__main__":
    main()
