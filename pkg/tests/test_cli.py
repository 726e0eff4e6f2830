import io
import json
import subprocess
import sys

import pytest

from zagierpoly.cli import main, parse_bfile


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_compute_bstar_csv():
    code, out, _ = run("compute", "bstar", "--max-n", "4", "--format", "csv")
    assert code == 0
    assert out == "n,bstar\n1,3/4\n2,1/24\n3,-1/4\n4,-27/80\n"


def test_compute_v_starts_at_zero():
    code, out, _ = run("compute", "v", "--max-n", "3", "--format", "bfile")
    assert code == 0
    assert out == "0 0\n1 -1/2\n2 11/12\n3 1/2\n"


def test_compute_alpha_and_json():
    code, out, _ = run("compute", "alpha", "--max-n", "2")
    assert code == 0
    doc = json.loads(out)
    assert [t["value"] for t in doc["terms"]] == [4, 24]
    code, out, _ = run("compute", "bstar", "--n", "2", "--j", "-1", "--format", "bfile")
    assert out == "2 -11/24\n"


def test_compute_z():
    code, out, _ = run("compute", "z", "--max-n", "2", "--format", "bfile")
    assert out == "1 11/3\n2 -13/5\n"


def test_compute_figure(tmp_path):
    path = tmp_path / "alpha.png"
    code, out, _ = run("compute", "alpha", "--max-n", "24", "--format", "csv", "--figure", str(path))
    assert code == 0
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert out.startswith("n,alpha\n1,4\n")


def test_usage_errors():
    assert run("verify", "bogus-suite")[0] == 2
    assert run("compute", "bstar", "--max-n", "0")[0] == 2
    assert run("compute", "v", "--j", "3")[0] == 2
    assert run("compute", "bstar", "--figure", "x.png")[0] == 2
    assert run("verify", "vcross", "--max-n", "10", "--heavy-max", "12")[0] == 2


def test_verify_exit_codes_and_schema():
    code, out, _ = run("verify", "theorem12", "--max-n", "60", "--no-timing")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"suite", "range", "checks", "failures", "elapsed_ms"}
    assert doc["failures"] == 0 and doc["elapsed_ms"] == 0
    assert all({"anchor", "status"} <= set(c) for c in doc["checks"])
    # round trip
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == out
    # the mod-64 scan is a genuine failure
    code, out, _ = run("verify", "congruences", "--max-n", "20", "--no-timing")
    assert code == 1
    assert any("witness" in c for c in json.loads(out)["checks"])


def test_verify_deterministic():
    a = run("verify", "bell", "--max-n", "4", "--no-timing")
    b = run("verify", "bell", "--max-n", "4", "--no-timing")
    assert a == b and a[0] == 0


def test_oeis_export():
    code, out, _ = run("oeis", "export", "--max-n", "6")
    assert code == 0
    assert out == "1 6\n2 20\n3 315\n4 280\n5 66\n6 3003\n"
    assert all(line == line.rstrip() for line in out.splitlines())


def test_oeis_compare(tmp_path):
    assert run("oeis", "compare")[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("1 6\n2 21\n")
    code, out, _ = run("oeis", "compare", "--snapshot", str(bad))
    assert code == 1
    assert json.loads(out)["checks"][0]["witness"][0]["n"] == 2
    assert run("oeis", "compare", "--snapshot", str(tmp_path / "missing.txt"))[0] == 2
    garbled = tmp_path / "garbled.txt"
    garbled.write_text("1 6 7\n")
    assert run("oeis", "compare", "--snapshot", str(garbled))[0] == 2


def test_parse_bfile_skips_comments():
    assert parse_bfile("# header\n\n1 6\n2 20\n") == {1: 6, 2: 20}


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zagierpoly.cli", "compute", "bstar", "--max-n", "2", "--format", "bfile"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 3/4\n2 1/24\n"
