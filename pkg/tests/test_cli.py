import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from curvebranch.cli import main, read_document, render_svg, write_document
from curvebranch.contour import build_initial_loops
from curvebranch.curve import BivariatePolynomial, discriminant_points
from curvebranch.layout import configure, minimal_spanning_tree

from conftest import WORKED

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def worked_doc(tmp_path, worked):
    path = tmp_path / "worked.json"
    write_document(str(path), worked, differentials=[[[[0, 0]], [[0, 0]], [[0, 0]], [[1, 0]]]])
    return path


def configure_base(terms):
    d = discriminant_points(BivariatePolynomial.from_terms(terms))
    return configure(d.points).base


def test_document_round_trip(worked_doc, worked):
    doc = read_document(str(worked_doc))
    assert np.array_equal(doc["curve"].coeffs, worked.coeffs)
    assert len(doc["differentials"]) == 1


def test_genus_report(worked_doc, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["genus", str(worked_doc), "--json", str(out)]) == 0
    text = capsys.readouterr().out
    assert "g = 3" in text and "Mon =" in text
    rep = json.loads(out.read_text())
    assert rep["genus"] == 3
    assert rep["infinity"] == "trivial"
    assert len(rep["monodromy"]) == 10 and len(rep["monodromy"][0]) == 3
    assert rep["tree"][-1] == rep["base_label"]


def test_report_is_deterministic_and_round_trips(worked_doc, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["monodromy", str(worked_doc), "--quiet", "--json", str(a)]) == 0
    assert main(["monodromy", str(worked_doc), "--quiet", "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert json.loads(json.dumps(rep)) == rep
    assert complex(*rep["base"]) == configure_base(WORKED)


def test_discriminant_command(tmp_path):
    path = tmp_path / "c.json"
    write_document(str(path), BivariatePolynomial.from_terms({(0, 2): 1, (1, 0): -1}))
    out = tmp_path / "r.json"
    assert main(["discriminant", str(path), "--quiet", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["points"] == [[0.0, 0.0]]


def test_periods_command(worked_doc, tmp_path):
    out = tmp_path / "p.json"
    assert main(["periods", str(worked_doc), "--quiet", "--ng", "32", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert np.array(rep["periods"]).shape == (1, 10, 3, 2)


def test_periods_without_differentials(tmp_path):
    path = tmp_path / "c.json"
    write_document(str(path), BivariatePolynomial.from_terms({(0, 2): 1, (1, 0): -1}))
    assert main(["periods", str(path), "--quiet"]) == 1


@pytest.mark.parametrize(
    "content",
    ["not json", '{"coeffs": [[1, 2], [3]]}', '{"coeffs": [[[1, 0], [0, 0]]]}', '{"other": 1}'],
)
def test_input_errors(tmp_path, content, capsys):
    path = tmp_path / "bad.json"
    path.write_text(content)
    assert main(["genus", str(path), "--quiet"]) == 1
    assert "error" in capsys.readouterr().err


def test_missing_file_and_bad_command(tmp_path):
    assert main(["genus", str(tmp_path / "none.json")]) == 1
    assert main(["explode", "x.json"]) == 1


def test_numerical_failure_exit_code(worked_doc, monkeypatch):
    from curvebranch import cli
    from curvebranch.monodromy import SheetTrackingError

    def fail(*args, **kwargs):
        raise SheetTrackingError("sheets collide")

    monkeypatch.setattr(cli, "analyze", fail)
    assert main(["genus", str(worked_doc), "--quiet"]) == 2


def test_plot_command(worked_doc, tmp_path):
    out = tmp_path / "w.svg"
    assert main(["plot", str(worked_doc), "--svg", str(out)]) == 0
    root = ET.parse(out).getroot()
    assert root.tag == SVG + "svg" and root.get("version") == "1.1"


def test_svg_structure(worked_config, worked_tree):
    loops = build_initial_loops(worked_config, worked_tree)
    root = ET.fromstring(render_svg(worked_config, worked_tree, loops))
    circles = root.findall(SVG + "circle")
    big = [c for c in circles if c.get("fill") == "none"]
    assert len(big) == 10
    assert len(circles) - len(big) == 20  # marked points
    assert len(root.findall(SVG + "polyline")) == 9
    assert len(root.findall(SVG + "rect[@class='base']")) == 1
    assert [t.text for t in root.findall(SVG + "text")] == [str(k) for k in range(1, 11)]
    for p in root.findall(SVG + "path"):
        assert " A " in p.get("d")


def test_svg_single_point():
    cfg = configure([0.5 + 0j])
    tree = minimal_spanning_tree(cfg)
    root = ET.fromstring(render_svg(cfg, tree, build_initial_loops(cfg, tree)))
    assert len([c for c in root.findall(SVG + "circle") if c.get("fill") == "none"]) == 1
    assert root.findall(SVG + "polyline") == []
