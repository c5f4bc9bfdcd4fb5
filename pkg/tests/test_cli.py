import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from convexbraid.cli import main
from convexbraid.derivations import bundled, dump_script
from convexbraid.diagram import emit_diagram
from convexbraid.presentations import build
from convexbraid.words import parse

SVG = "{http://www.w3.org/2000/svg}"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_equal(capsys):
    code, out, _ = run(["equal", "--n", "8", "R{1,2,3,4,5,6,7,8}", "R{4,5,6,7} R{4,8,1,2,3}"], capsys)
    assert code == 0 and out.strip() == "equal"
    code, out, _ = run(["equal", "--n", "3", "s1", "s2"], capsys)
    assert code == 1 and out.strip() == "not equal"


def test_parse_errors_are_usage_errors(capsys):
    code, _, err = run(["equal", "--n", "3", "s1", "R{1,2"], capsys)
    assert code == 2 and "cannot parse" in err
    code, _, err = run(["expand", "--n", "3", "s7"], capsys)
    assert code == 2


def test_argparse_usage_errors(capsys):
    for argv in (["nope"], ["verify", "--n", "4"], ["verify", "--kind", "bogus", "--n", "4"], []):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_expand(capsys):
    code, out, _ = run(["expand", "--n", "3", "R{1,3}"], capsys)
    assert code == 0 and out.strip() == "s2 s1 s2^-1"


def test_verify(capsys):
    code, out, _ = run(["verify", "--kind", "twist", "--n", "5", "--jobs", "2"], capsys)
    assert code == 0
    assert "relators: 470, failed: 0" in out
    code, _, err = run(["verify", "--kind", "swing", "--n", "1"], capsys)
    assert code == 2 and "n >= 2" in err


def test_abelianize(capsys):
    code, out, _ = run(["abelianize", "--kind", "boundary_swing", "--n", "4"], capsys)
    assert code == 0 and out.strip() == "Z^10"


def test_witness(capsys):
    code, out, _ = run(["witness", "--n", "2", "1", "2"], capsys)
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(["witness", "--n", "5", "2", "4"], capsys)
    assert code == 0 and out.startswith("S{3}")
    code, _, _ = run(["witness", "--n", "4", "2", "2"], capsys)
    assert code == 2


@pytest.mark.parametrize("fmt", ["text", "structured"])
def test_present_roundtrip(fmt, tmp_path, capsys):
    out_file = tmp_path / "p.out"
    code, _, _ = run(["present", "--kind", "swing", "--n", "4", "--format", fmt, "--out", str(out_file)], capsys)
    assert code == 0
    p = build("swing", 4)
    text = out_file.read_text()
    if fmt == "structured":
        rels = json.loads(text)["relators"]
    else:
        rels = text.split("rels:\n", 1)[1].split("\n")[:-1]
    assert [parse(r.strip(), 4) for r in rels] == p.relators
    code, out, _ = run(["present", "--kind", "swing", "--n", "4", "--format", fmt], capsys)
    assert out == text


def test_derive_bundled(capsys):
    code, out, _ = run(["derive", "--script", "artin-5th-from-(2)(3)", "--n", "4", "5"], capsys)
    assert code == 0 and out.strip().endswith("scripts: 6, failed: 0")
    code, _, err = run(["derive", "--script", "no-such-thing"], capsys)
    assert code == 2


def test_derive_file(tmp_path, capsys):
    s = next(bundled("lantern-implies-twist-factorization", 4))
    good = tmp_path / "good.json"
    good.write_text(dump_script(s))
    code, out, _ = run(["derive", "--script", str(good)], capsys)
    assert code == 0
    doc = json.loads(dump_script(s))
    doc["goal"]["lhs"] = doc["goal"]["rhs"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(["derive", "--script", str(bad)], capsys)
    assert code == 1 and "FAIL" in out
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    code, _, _ = run(["derive", "--script", str(junk)], capsys)
    assert code == 2


def test_diagram(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for f in (a, b):
        code, _, _ = run(["diagram", "--n", "8", "--sets", "{1,2,3,5}", "{4,7,8}", "--out", str(f)], capsys)
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    root = ET.fromstring(a.read_bytes())
    assert root.get("viewBox") == "0 0 240 240"
    assert len(root.findall(f"{SVG}polygon")) == 2
    code, _, _ = run(["diagram", "--n", "4", "--sets", "{1,9}"], capsys)
    assert code == 2


def test_emit_diagram_cases():
    one = ET.fromstring(emit_diagram(1).encode())
    assert len(one.findall(f"{SVG}text")) == 1
    assert not one.findall(f"{SVG}polygon")
    sub = ET.fromstring(emit_diagram(8, [[1, 2, 4, 5, 8]]).encode())
    pts = sub.find(f"{SVG}polygon").get("points").split()
    assert len(pts) == 5 and pts[0] == "120.00,30.00"
    assert emit_diagram(5, [[2], [1, 3]]) == emit_diagram(5, [[2], [1, 3]])
    with pytest.raises(ValueError):
        emit_diagram(4, [[]])


def test_console_entry_point_headless():
    proc = subprocess.run(
        [sys.executable, "-m", "convexbraid.cli", "equal", "--n", "4", "S{1,2}", "T{1}|{2}"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "equal"
