import csv
import io
import json
import subprocess
import sys

import pytest

from flagcsm import golden
from flagcsm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    return exc.value.code, capsys.readouterr().err


def test_compute_text(capsys):
    code, out = run(capsys, "compute", "--type", "A", "--rank", "2", "--cell", "1 2")
    assert code == 0
    assert out.splitlines()[1] == "  [X(231)]: a1^2 + a1*a2 + 2*a1*h + a2*h + h^2"


def test_compute_nonequivariant_csv_matches_golden(capsys):
    _, out = run(capsys, "compute", "--type", "A", "--rank", "2", "--cell", "1 2", "--non-equivariant", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    got = {tuple(int(t) for t in r["word"].split()): int(r["coeff"]) for r in rows}
    assert got == golden.FL3_CSM[(1, 2)]


def test_compute_json_roundtrip(capsys):
    from flagcsm.cohomology import CohClass
    from flagcsm.csmops import csm
    from flagcsm.cohomology import flag_variety

    _, out = run(capsys, "compute", "--type", "B", "--rank", "2", "--cell", "2 1", "--basis", "Y", "--variant", "dual", "--format", "json")
    d = json.loads(out)
    sp = flag_variety("B", 2)
    assert CohClass.from_json(d["class"]) == csm(sp, sp.group.from_word([2, 1]), "Y", "dual").cls
    assert d["cell_basis"] == "Y" and d["variant"] == "dual"


def test_compute_hbar_and_parabolic(capsys):
    _, out = run(capsys, "compute", "--type", "A", "--rank", "2", "--parabolic", "1", "--cell", "1 2", "--non-equivariant", "--format", "json")
    d = json.loads(out)
    assert {t["word"]: t["coeff"] for t in d["terms"]} == {"": "1", "2": "2", "1 2": "1"}
    _, out = run(capsys, "compute", "--type", "A", "--rank", "1", "--cell", "1", "--hbar", "1", "--coords", "weights")
    assert "[X(21)]: 2*w1 + 1" in out


def test_matrix_window_order_is_fl4(capsys):
    _, out = run(capsys, "matrix", "--type", "A", "--rank", "3", "--order", "window", "--format", "json")
    d = json.loads(out)
    assert d["labels"] == list(golden.FL4_WINDOWS)
    assert [[int(x) for x in r] for r in d["rows"]] == [list(r) for r in golden.FL4_CSM]
    _, out = run(capsys, "matrix", "--type", "A", "--rank", "3", "--order", "window", "--inverse", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][1:] == list(golden.FL4_WINDOWS)
    assert [[int(x) for x in r[1:]] for r in rows[1:]] == [list(r) for r in golden.FL4_CSM_INVERSE]


def test_matrix_text_and_partial_flag(capsys):
    _, out = run(capsys, "matrix", "--type", "G", "--rank", "2")
    assert len(out.splitlines()) == 13
    _, out = run(capsys, "matrix", "--type", "A", "--rank", "3", "--parabolic", "1,3", "--format", "csv")
    assert len(out.splitlines()) == 7


def test_localize(capsys):
    _, out = run(capsys, "localize", "--type", "A", "--rank", "2", "--cell", "1", "--basis", "Y", "--format", "json")
    gkm = json.loads(out)["values"]
    _, out = run(capsys, "localize", "--type", "A", "--rank", "2", "--cell", "1", "--basis", "Y", "--method", "closed-form", "--format", "json")
    assert json.loads(out)["values"] == gkm
    _, out = run(capsys, "localize", "--type", "A", "--rank", "2", "--cell", "", "--at", "id")
    # the point class at id restricts to e(T_id) = -a1 a2 (a1 + a2)
    assert out.strip() == "123: -a1^2*a2 - a1*a2^2"


def test_verify_subcommand(capsys):
    code, out = run(capsys, "verify", "--suite", "golden-fl3", "--suite", "p2-negative-control", "--format", "json", "--deterministic")
    d = json.loads(out)
    assert code == 0 and d["passed"] and len(d["reports"]) == 2
    code, out = run(capsys, "verify", "--list")
    assert "hecke-orthogonality" in out
    code, out = run(capsys, "verify", "--suite", "chern-product", "--type", "B", "--rank", "2", "--format", "csv")
    assert out.splitlines()[1].startswith("chern-product,B2,True")
    code, out = run(capsys, "verify", "--type", "A", "--rank", "2", "--parabolic", "1")
    assert code == 0 and "golden" not in out and "gp-orthogonality [A2/1]" in out


@pytest.mark.parametrize(
    "argv,token",
    [
        (["compute", "--type", "A", "--rank", "2", "--cell", "1 x"], "'x'"),
        (["compute", "--type", "A", "--rank", "2", "--cell", "1 1"], "not reduced"),
        (["compute", "--type", "A", "--rank", "2", "--cell", "3"], "'3'"),
        (["compute", "--type", "E", "--rank", "3", "--cell", ""], "invalid rank 3"),
        (["compute", "--type", "A", "--rank", "2", "--parabolic", "1,q", "--cell", ""], "'q'"),
        (["compute", "--type", "A", "--rank", "2", "--parabolic", "5", "--cell", ""], "parabolic index 5"),
        (["compute", "--type", "A", "--rank", "2", "--parabolic", "1", "--cell", "1"], "minimal coset representative"),
        (["compute", "--type", "A", "--rank", "2", "--cell", "1", "--hbar", "x"], "'x'"),
        (["localize", "--type", "A", "--rank", "2", "--cell", "1", "--method", "closed-form"], "closed-form"),
        (["verify", "--suite", "nope"], "'nope'"),
        (["matrix", "--type", "B", "--rank", "2", "--order", "window"], "type A"),
        (["verify", "--suite", "golden-fl4", "--type", "A", "--rank", "2"], "'golden-fl4'"),
    ],
)
def test_usage_errors_name_the_token(capsys, argv, token):
    code, err = run_error(capsys, *argv)
    assert code == 2 and token in err and err.startswith("flagcsm: error:")


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "flagcsm", "compute", "--type", "B", "--rank", "2", "--cell", "1 2 1", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
    argv = [sys.executable, "-m", "flagcsm", "verify", "--suite", "golden-fl3", "--format", "json", "--deterministic"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
