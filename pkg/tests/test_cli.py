import json

import pytest

from midspec.cli import main
from midspec.flat import square_family
from midspec.sphere import RoundSphere, SphericalQuotient


@pytest.fixture
def spaces(tmp_path):
    paths = {}
    for k in ("klein", "cylinder", "pillow", "torus"):
        p = tmp_path / f"{k}.json"
        p.write_text(square_family(k).dumps())
        paths[k] = str(p)
    for name, signs in (("rp2", (-1, -1, -1)), ("hemi", (1, 1, -1)), ("s2", None)):
        p = tmp_path / f"{name}.json"
        p.write_text(SphericalQuotient(RoundSphere(2), signs).dumps())
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_spectrum_formats(spaces, capsys):
    code, out = run(capsys, "spectrum", "--space", spaces["klein"], "--p", "1", "--cutoff", "2xPI2")
    assert code == 0
    d = json.loads(out.out)
    assert d["degree"] == 1 and d["entries"][0] == {"plain": "0/1", "pi2": "0/1", "mult": 1}
    code, out = run(capsys, "spectrum", "--space", spaces["klein"], "--p", "1", "--cutoff", "2xPI2",
                    "--format", "csv")
    assert out.out.splitlines()[0] == "plain,pi2,approx,mult"
    code, out = run(capsys, "spectrum", "--space", spaces["rp2"], "--p", "1", "--format", "md")
    assert code == 0 and "| 2 | 2.000000 | 3 |" in out.out


def test_compare_exit_codes(spaces, capsys):
    code, out = run(capsys, "compare", "--a", spaces["klein"], "--b", spaces["cylinder"], "--p", "1")
    assert code == 0 and json.loads(out.out)["outcome"]["outcome"] == "equal"
    code, out = run(capsys, "compare", "--a", spaces["klein"], "--b", spaces["pillow"], "--p", "1")
    assert code == 2
    code, _ = run(capsys, "compare", "--a", spaces["klein"], "--b", spaces["pillow"], "--p", "1",
                  "--exclude-zero")
    assert code == 0
    code, _ = run(capsys, "compare", "--a", spaces["rp2"], "--b", spaces["hemi"], "--p", "1")
    assert code == 0


def test_lengths_and_fixed_set(spaces, capsys):
    code, out = run(capsys, "lengths", "--space", spaces["klein"], "--max", "1")
    assert code == 0 and json.loads(out.out)["displacements"][0]["length_squared"] == "1/4"
    code, out = run(capsys, "lengths", "--space", spaces["rp2"])
    assert code == 0 and json.loads(out.out)["approx"] == pytest.approx(3.141592653589793)
    code, out = run(capsys, "fixed-set", "--space", spaces["pillow"])
    assert code == 0 and json.loads(out.out)["isolated_point_count"] == 4
    code, out = run(capsys, "fixed-set", "--space", spaces["rp2"])
    assert code == 1 and "freely" in out.err


def test_heat(spaces, capsys):
    code, out = run(capsys, "heat", "--space", spaces["cylinder"], "--p", "1", "--t", "0.5", "1")
    d = json.loads(out.out)
    assert code == 0 and d["coefficients"]["c(p)"] == 0 and len(d["traces"]) == 2
    code, out = run(capsys, "heat", "--space", spaces["cylinder"], "--p", "0", "--t", "1",
                    "--format", "csv")
    assert out.out.startswith("t,value\n")


def test_scenario_commands(capsys):
    code, out = run(capsys, "scenario", "list")
    assert code == 0 and "thm-3.1" in out.out.split()
    code, out = run(capsys, "scenario", "run", "thm-3.1")
    d = json.loads(out.out)
    assert code == 0 and d["verdict"]["status"] == "ConfirmedWithCaveat"
    code, out = run(capsys, "scenario", "run", "weakrem-1.5", "--format", "md")
    assert code == 0 and out.out.startswith("## weakrem-1.5")
    code, out = run(capsys, "scenario", "run", "nope")
    assert code == 1
    code, _ = run(capsys, "scenario", "run", "ex-2.5", "--cutoff", "60")
    assert code == 1


def test_certify(tmp_path, capsys):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"kind": "flat", "rank": 2, "gram": [[1, 0], [0, 1]]}))
    klein = tmp_path / "k.json"
    klein.write_text(json.dumps({"A": [[1, 0], [0, -1]], "b": ["1/2", "0"]}))
    rot = tmp_path / "r.json"
    rot.write_text(json.dumps({"A": [[-1, 0], [0, -1]], "b": [0, 0]}))
    code, out = run(capsys, "certify", "--m", str(m), "--tau1", str(klein), "--tau2", str(klein))
    assert code == 0 and json.loads(out.out)["conclusion"]
    code, out = run(capsys, "certify", "--m", str(m), "--tau1", str(klein), "--tau2", str(rot))
    assert code == 3 and json.loads(out.out)["failed"] == "orientation_reversing"


def test_surface(capsys):
    code, out = run(capsys, "surface", "--t", "1")
    assert code == 0 and json.loads(out.out)["genus"] == 3
    code, out = run(capsys, "surface", "--t", "2", "--format", "md")
    assert "# Genus 5 surface" in out.out
    code, out = run(capsys, "surface", "--format", "dot")
    assert out.out.startswith("graph gluing {")


def test_usage_errors(tmp_path, capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "spectrum", "--space", str(tmp_path / "missing.json"), "--p", "1")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "lens"}))
    assert run(capsys, "spectrum", "--space", str(bad), "--p", "1")[0] == 1
    assert run(capsys, "spectrum", "--space", str(bad), "--p", "1", "--cutoff", "x")[0] == 1
