import json

import pytest

from expr_io import read_map
from jonquieres import discover_commands, format_report, main
from jonquieres_consts import ExitStatus, Report

from conftest import sample


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def test_commands_are_discovered():
    assert set(discover_commands()) == {
        "apply",
        "closure",
        "coadjoint-slice",
        "compose",
        "invariants",
        "invert",
        "line-check",
        "order",
        "slice",
        "torus-invariants",
    }


def test_order_of_translation(capsys):
    status, out = run(capsys, "order", sample("translation.json"))
    assert status == 0
    assert out.strip() == "infinite"


def test_order_json(capsys):
    status, out = run(capsys, "--json", "order", sample("negation.json"))
    assert status == 0
    document = json.loads(out)
    assert document["command"] == "order"
    assert document["status"] == 0
    assert document["result"]["order"]["kind"] == "finite"


def test_line_check(capsys):
    status, out = run(capsys, "line-check", "--d1", "5", "--d2", "3")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "(d1, d2) = (5, 3)"
    assert "  no affine line is a rational cross-section" in lines


def test_line_check_candidate_and_sweep(capsys):
    status, out = run(capsys, "line-check", "--d1", "2", "--d2", "1")
    assert status == 0
    assert "  candidate line: x2 = -1" in out.splitlines()
    status, out = run(capsys, "line-check", "--sweep", "5")
    assert status == 0
    assert out.splitlines()[-1] == "every pair concludes no_line: yes"


def run_failing(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    assert status == ExitStatus.ERROR.value
    assert captured.out == ""
    return captured.err.splitlines()[-1]


def test_line_check_needs_weights(capsys):
    assert run_failing(capsys, "line-check", "--d1", "5") == (
        "error: line-check needs --d1 and --d2, or --sweep"
    )


def test_coadjoint_slice_heisenberg(capsys):
    status, out = run(capsys, "coadjoint-slice", sample("heisenberg.json"))
    assert status == 0
    assert out.splitlines() == [
        "subspace: x1 = 0, x2 = 0",
        "invariants: x3",
        "free coordinates: x3",
    ]


def test_slice_json_is_verified(capsys):
    status, out = run(capsys, "--json", "slice", sample("heisenberg_flows.json"))
    assert status == 0
    result = json.loads(out)["result"]
    assert result["verified"] is True
    assert result["subspace"] == ["x1 = 0", "x2 = 0"]


def test_closure_overflow_is_inconclusive(capsys):
    status, out = run(capsys, "closure", sample("translation.json"), "--cap", "10")
    assert status == ExitStatus.INCONCLUSIVE.value
    assert out.strip() == "overflow: more than 10 elements"


def test_closure_klein(capsys):
    status, out = run(capsys, "closure", sample("flip_x1.json"), sample("flip_x2.json"))
    assert status == 0
    assert out.strip() == "finite subgroup of order 4, abelian"


def test_invariants_translation_is_inconclusive(capsys):
    status, out = run(
        capsys, "invariants", sample("translation.json"), "--deg", "2", "--coeff-deg", "1"
    )
    assert status == ExitStatus.INCONCLUSIVE.value
    assert out.splitlines() == [
        "level 1: unresolved within degree 2, coefficient degree 1",
        "pure certified: no",
    ]


def test_invariants_sign_flips(capsys):
    status, out = run(capsys, "invariants", sample("negation.json"))
    assert status == 0
    assert out.splitlines()[-1] == "pure certified: yes"


def test_torus_invariants(capsys):
    status, out = run(capsys, "torus-invariants", "--weights", "5,3")
    assert status == 0
    lines = out.splitlines()
    assert "faithful: yes" in lines
    assert "transcendence degree: 1" in lines


def test_apply(capsys):
    status, out = run(capsys, "apply", sample("negation.json"), "--expr", "x1*x2 + x1")
    assert status == 0
    assert out.strip() == "x1*x2 - x1"


@pytest.mark.parametrize("name", ["missing.json", "heisenberg.json"])
def test_bad_input_exits_with_error(capsys, name):
    assert run_failing(capsys, "order", sample(name)).startswith("error: ")


def test_undecodable_file_exits_with_error(capsys, tmp_path):
    target = tmp_path / "latin1.json"
    target.write_bytes(b'{"n": 1, "variant": "J", "entries": [{"mu": "1", "f": "\xe9"}]}')
    assert run_failing(capsys, "order", str(target)).startswith("error: cannot read input")


def test_error_report_json_on_stderr(capsys):
    last = run_failing(capsys, "--json", "order", sample("missing.json"))
    assert last == "}"


@pytest.mark.parametrize(
    "argv",
    [
        ["no-such-command"],
        ["order"],
        ["line-check", "--d1", "five"],
    ],
)
def test_usage_errors_exit_with_error(capsys, argv):
    assert main(argv) == ExitStatus.ERROR.value
    assert capsys.readouterr().out == ""


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    assert "line-check" in capsys.readouterr().out


def test_output_is_deterministic(capsys):
    first = run(capsys, "--json", "coadjoint-slice", sample("filiform4.json"))
    second = run(capsys, "--json", "coadjoint-slice", sample("filiform4.json"))
    assert first == second


def test_compose_writes_output(capsys, tmp_path):
    target = tmp_path / "product.json"
    status, _ = run(
        capsys,
        "compose",
        sample("flip_x1.json"),
        sample("flip_x2.json"),
        "--output",
        str(target),
    )
    assert status == 0
    assert read_map(str(target)) == read_map(sample("negation.json"))


def test_invert_lines(capsys):
    status, out = run(capsys, "invert", sample("shear.json"))
    assert status == 0
    assert out.splitlines()[0].startswith("x1 -> ")


def test_format_report():
    report = Report("order", {"order": {"kind": "infinite"}}, ["infinite"])
    assert format_report(report, False) == "infinite"
    assert json.loads(format_report(report, True)) == {
        "command": "order",
        "status": 0,
        "result": {"order": {"kind": "infinite"}},
    }
