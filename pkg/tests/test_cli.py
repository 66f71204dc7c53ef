"""CLI contract: subcommands, exit codes, deterministic JSON."""

import json

import pytest

from liefam.cli import main, parse_laurent, parse_window


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_helpers():
    assert parse_window("-6..6") == range(-6, 7)
    assert parse_window("1..16") == range(1, 17)
    assert parse_laurent("0") is None
    lp = parse_laurent("1:-2,3:0")
    assert lp.coefficient(-2) == 1 and lp.coefficient(0) == 3


def test_families_list(capsys):
    code, out = run(capsys, "--json", "families", "list")
    assert code == 0
    data = json.loads(out)
    assert "witt" in data["families"]
    assert data["families"]["d-line"]["requires"] == ["s"]


def test_bracket_element(capsys):
    code, out = run(capsys, "--json", "bracket", "--family", "elliptic", "--n", "2", "--m", "4")
    assert code == 0
    data = json.loads(out)
    assert len(data["element"]["components"]) == 3


def test_verify_jacobi_exit_codes(capsys):
    code, _ = run(capsys, "verify-jacobi", "--family", "witt", "--window", "-8..8")
    assert code == 0


def test_verify_geometry(capsys):
    code, out = run(
        capsys, "--json", "verify-geometry", "--family", "three-point",
        "--window", "-4..4",
    )
    assert code == 0
    assert json.loads(out)["report"]["status"] == "PASS"


def test_goncharova_json(capsys):
    code, out = run(capsys, "--json", "cohomology", "goncharova", "--qmax", "2", "--smax", "8")
    assert code == 0
    data = json.loads(out)
    assert [1, 1] in data["nonzero_at"] and [2, 5] in data["nonzero_at"]


def test_cohomology_check_and_solve(capsys):
    code, _ = run(capsys, "cohomology", "check", "--cocycle", "ds-order1")
    assert code == 0
    code, out = run(
        capsys, "--json", "cohomology", "solve", "--cocycle", "ds-order1",
        "--ansatz", "parity-constant", "--weight", "-2",
    )
    assert code == 0
    data = json.loads(out)
    assert data["result"]["status"] == "solved"
    assert data["result"]["phi"]["rule"]["even"] == ["0", "-3"]
    # beta3 has no coboundary witness: exit code 1 with a certificate
    code, out = run(
        capsys, "--json", "cohomology", "solve", "--cocycle", "beta3",
        "--ansatz", "per-index", "--weight", "-2", "--window", "1..20",
    )
    assert code == 1
    assert json.loads(out)["result"]["status"] == "infeasible"


def test_cohomology_compare(capsys):
    code, out = run(
        capsys, "--json", "cohomology", "compare", "--cocycle", "w1-order1",
        "--against", "beta3", "--ansatz", "affine", "--weight", "-2",
        "--window", "1..24", "--pin", "1=0,2=0",
    )
    assert code == 0
    data = json.loads(out)
    assert data["result"]["scalar"] == "1/3"


def test_central_commands(capsys):
    code, out = run(
        capsys, "--json", "central", "cocycle", "--family", "witt",
        "--R", "0", "--window", "-10..10",
    )
    assert code == 0
    support = json.loads(out)["support"]
    assert [-2, 2, "-6"] in support
    code, out = run(
        capsys, "--json", "central", "locality", "--family", "witt",
        "--window", "-8..8",
    )
    assert code == 0
    assert json.loads(out)["report"]["M"] == 0
    code, out = run(
        capsys, "--json", "central", "independence", "--r1", "1:0",
        "--r2", "0", "--window", "-10..10",
    )
    assert code == 0
    assert json.loads(out)["lambda"] == {"-2": "1"}


def test_moduli_commands(capsys):
    code, out = run(capsys, "--json", "moduli", "classify", "--e1", "1", "--e2", "-1/2")
    assert code == 0
    assert json.loads(out)["fiber"] == {"kind": "nodal", "subcase": "IIa"}
    code, out = run(capsys, "--json", "moduli", "j-line", "--s", "inf")
    assert code == 0
    assert json.loads(out)["j"] == "1728"
    code, out = run(
        capsys, "--json", "moduli", "rescale", "--family", "d-line", "--s", "3",
        "--params", "e1=4", "--lambda2", "1/4",
    )
    assert code == 0


def test_json_reruns_are_byte_identical(capsys):
    args = ("--json", "verify-geometry", "--family", "elliptic",
            "--window", "-3..3", "--samples", "4", "--seed", "11")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bracket", "--family", "witt"])  # missing --n/--m
    assert exc.value.code == 2
    code = main(["moduli", "j-line", "--s", "1"])  # degenerate line
    assert code == 2


def test_paper_suite_subset(capsys):
    code, out = run(capsys, "--json", "paper-suite", "--only", "3", "7")
    assert code == 0
    data = json.loads(out)
    assert [c["status"] for c in data["criteria"]] == ["PASS", "PASS"]


def test_paper_suite_reruns_are_byte_identical(capsys):
    _, first = run(capsys, "--json", "paper-suite", "--only", "3", "6", "7", "8")
    _, second = run(capsys, "--json", "paper-suite", "--only", "3", "6", "7", "8")
    assert first == second


def test_cocycle_from_json_file(tmp_path, capsys):
    from liefam.suite import named_cocycle

    _, omega = named_cocycle("ds-order1")
    path = tmp_path / "cocycle.json"
    path.write_text(json.dumps({"algebra": "witt", "cochain": omega.to_json()}))
    code, out = run(capsys, "--json", "cohomology", "check", "--cocycle", str(path))
    assert code == 0
    assert json.loads(out)["report"]["status"] == "PASS"
