"""Command-line surface: verbs, formats, exit codes, determinism."""

import json

from ribbonpd.cli import main
from ribbonpd.fileio import decode
from ribbonpd.ribbon import surface_stats


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pdg_family_text(capsys):
    code, out, _ = run(capsys, "pdg", "--family", "cycle", "--n", "5")
    assert code == 0 and out == "2 + 30*z\n"


def test_pdg_methods_agree(capsys):
    results = []
    for method in ("brute", "closed", "recurrence"):
        code, out, _ = run(capsys, "pdg", "--family", "necklace", "--n", "3", "--method", method)
        assert code == 0
        results.append(out)
    assert results[0] == results[1] == results[2]


def test_pdg_formats(capsys):
    code, out, _ = run(capsys, "pdg", "--family", "cycle", "--n", "3", "--format", "csv")
    assert code == 0 and out == "1,2,6\n"
    code, out, _ = run(capsys, "pdg", "--family", "cycle", "--n", "3", "--format", "json")
    assert json.loads(out) == {"degree": 1, "coefficients": [2, 6]}


def test_euler_verbs(capsys):
    code, out, _ = run(capsys, "euler", "--family", "bouquet_twisted", "--n", "3")
    assert code == 0 and out == "8*z^3\n"
    code, out2, _ = run(
        capsys, "euler", "--family", "bouquet_twisted", "--n", "3", "--method", "closed"
    )
    assert code == 0 and out2 == out


def test_dual_round_trip(tmp_path, capsys):
    src = tmp_path / "c2.rg"
    src.write_text("ribbongraph 1\nvertices 2\nedges 2\nrot 0: 0.0 1.1\nrot 1: 1.0 0.1\n")
    mid = tmp_path / "dual.rg"
    back = tmp_path / "back.rg"
    assert main(["dual", "--file", str(src), "--subset", "0", "--out", str(mid)]) == 0
    assert main(["dual", "--file", str(mid), "--subset", "0", "--out", str(back)]) == 0
    g = decode(src.read_text())
    h = decode(back.read_text())
    assert surface_stats(g) == surface_stats(h)
    # a partial dual shares the genus polynomial with the original graph
    code, out, _ = run(capsys, "pdg", "--file", str(mid))
    assert code == 0 and out == "2 + 2*z\n"


def test_maxgenus(tmp_path, capsys):
    src = tmp_path / "c2.rg"
    src.write_text("ribbongraph 1\nvertices 2\nedges 2\nrot 0: 0.0 1.1\nrot 1: 1.0 0.1\n")
    for method in ("brute", "xi"):
        code, out, _ = run(capsys, "maxgenus", "--file", str(src), "--method", method)
        assert code == 0 and out == "1\n"


def test_spectrum_counterexample(tmp_path, capsys):
    import ribbonpd as rp
    from ribbonpd.families import spec

    src = tmp_path / "cx.rg"
    src.write_text(rp.encode(rp.generate(spec("join_with_bm", 2, 1))))
    code, out, _ = run(capsys, "spectrum", "--file", str(src), "--euler")
    assert code == 0 and out == "{1,3} NOT interpolating\n"


def test_spectrum_interpolating(tmp_path, capsys):
    import ribbonpd as rp
    from ribbonpd.families import spec

    src = tmp_path / "c3.rg"
    src.write_text(rp.encode(rp.generate(spec("cycle", 3))))
    code, out, _ = run(capsys, "spectrum", "--file", str(src))
    assert code == 0 and out == "{0,1} interpolating\n"


def test_exit_codes(tmp_path, capsys):
    assert main(["pdg"]) == 2  # usage: missing source
    assert main(["nonsense"]) == 2
    bad = tmp_path / "bad.rg"
    bad.write_text("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.0 0.0\n")
    assert main(["pdg", "--file", str(bad)]) == 3
    twisted = tmp_path / "b1.rg"
    twisted.write_text("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.0 0.1\ntwist 0\n")
    assert main(["pdg", "--file", str(twisted)]) == 4  # non-orientable
    capsys.readouterr()
    assert main(["pdg", "--family", "cycle", "--n", "9", "--cap", "5"]) == 4
    assert main(["pdg", "--family", "cycle"]) == 4  # missing --n
    assert main(["pdg", "--family", "cycle", "--n", "3", "--method", "closed", "--m", "1"]) == 4
    capsys.readouterr()


def test_verify_stats_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "stats")
    assert code == 0
    assert out.strip().endswith("PASS suite stats")


def test_verify_failure_exit_code(capsys, monkeypatch):
    from ribbonpd import verifysuites

    monkeypatch.setitem(
        verifysuites.SUITES, "stats", lambda **kw: (False, ["FAIL synthetic"])
    )
    code, out, _ = run(capsys, "verify", "--suite", "stats")
    assert code == 5
    assert out.strip().endswith("FAIL suite stats")


def test_verify_small_theorems_run(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorems", "--seed", "5", "--trials", "3", "--max-edges", "6")
    assert code == 0
    assert "deletion-cycle" in out


def test_stats_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "stats", "--family", "necklace", "--n-max", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,mean_num,mean_den,var_num,var_den,ks"
    assert lines[1].startswith("1,3,4,3,16,")
    target = tmp_path / "rows.csv"
    code, out2, _ = run(capsys, "stats", "--family", "necklace", "--n-max", "2", "--out", str(target))
    assert code == 0 and out2 == ""
    assert target.read_text() == out


def test_byte_determinism_between_runs_and_threads(capsys):
    outs = set()
    for threads in ("1", "8", "1"):
        code, out, _ = run(
            capsys, "pdg", "--family", "necklace", "--n", "4", "--threads", threads
        )
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
