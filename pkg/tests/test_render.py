from pathlib import Path

import pytest

from hyperweyl.errors import UnsupportedLevel
from hyperweyl.families import named_L
from hyperweyl.hyper import HyperPerm
from hyperweyl.render import render_ascii, render_grid, render_svg

SNAP = Path(__file__).parent / "snapshots"


def test_identity_has_no_strokes():
    svg = render_svg(HyperPerm.identity(4, 2))
    assert "<polyline" not in svg and '<line id="c' not in svg
    assert svg.count("<circle") == 16


def test_single_horizontal_segment():
    svg = render_svg(HyperPerm.parse("((1,2),(1,3))", 4))
    assert '<line id="c0" x1="64" y1="32" x2="96" y2="32"/>' in svg
    assert "<polyline" not in svg


def test_three_cycles_are_directed():
    c = dict(named_L(4, 1, (3, 4, 2)))["c"]
    svg = render_svg(c)
    assert svg.count("<polyline") == 3 and svg.count("<polygon") == 3
    text = render_ascii(c)
    assert text.splitlines()[1] == "1 . . . ."
    assert "a: (2,2) -> (2,3) -> (2,4) -> (2,2)" in text


def test_ascii_transposition():
    text = render_grid(HyperPerm.parse("((1,1),(1,2))", 4), "ascii")
    assert text.splitlines()[1] == "1 a a . ."
    assert "a: (1,1) - (1,2)" in text


@pytest.mark.parametrize("name,perm", [
    ("t24_s1", "((1,1),(1,4))((4,1),(4,4))((1,2),(1,3))((4,2),(4,3))"),
    ("c0_12", "((1,3),(1,4),(2,3),(2,4))"),
])
def test_svg_snapshot(name, perm):
    svg = render_svg(HyperPerm.parse(perm, 4))
    assert svg == render_svg(HyperPerm.parse(perm, 4))
    path = SNAP / f"{name}.svg"
    if not path.exists():
        path.write_text(svg)
    assert svg == path.read_text()


def test_level_guard():
    with pytest.raises(UnsupportedLevel):
        render_svg(HyperPerm.identity(2, 3))
