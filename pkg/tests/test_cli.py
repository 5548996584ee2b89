"""The command-line surface: exit codes, determinism, golden values."""

import json

from genaft.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_bounded_complete_poset(capsys, data_dir):
    code, out, _ = run(capsys, "check", str(data_dir / "vee_poset.json"))
    assert code == 0
    assert "bounded-complete cpo" in out
    assert "flower framework axioms: pass" in out


def test_check_complete_lattice_runs_both_spaces(capsys, data_dir):
    code, out, _ = run(capsys, "check", str(data_dir / "vee_lattice.json"))
    assert code == 0
    assert "interval framework axioms: pass" in out
    assert "flower framework axioms: pass" in out


def test_check_cyclic_input_exits_two(capsys, data_dir):
    code, _, err = run(capsys, "check", str(data_dir / "cyclic.json"))
    assert code == 2
    assert "cycle" in err


def test_check_missing_file_exits_two(capsys, data_dir):
    code, _, err = run(capsys, "check", str(data_dir / "nope.json"))
    assert code == 2


def test_check_json_format(capsys, data_dir):
    code, out, _ = run(capsys, "check", str(data_dir / "vee_poset.json"), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["classification"]["is_bounded_complete"] is True
    assert "flower" in payload["checks"]


def test_solve_agent_interval_wf_is_uninformative(capsys, data_dir):
    code, out, _ = run(
        capsys,
        "solve",
        str(data_dir / "agent_theory.json"),
        "--space",
        "interval",
        "--semantics",
        "kk,wf",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    # both fixpoints stay at the least approximant: nothing is derived
    assert payload["semantics"]["kk"]["aub"] == "{}"
    assert payload["semantics"]["wf"]["aub"] == "{}"
    assert payload["semantics"]["kk"]["alb"].count("{") == 9


def test_solve_agent_flower_wf_finds_the_belief_state(capsys, data_dir):
    code, out, _ = run(
        capsys,
        "solve",
        str(data_dir / "agent_theory.json"),
        "--space",
        "flower",
        "--semantics",
        "wf",
    )
    assert code == 0
    assert "exact: {{p,q},{q}}" in out


def test_solve_review_interval_exits_three(capsys, data_dir):
    code, _, err = run(capsys, "solve", str(data_dir / "review_wadf.json"))
    assert code == 3
    assert "use --space flower" in err


def test_solve_review_flower_status(capsys, data_dir):
    code, out, _ = run(
        capsys,
        "solve",
        str(data_dir / "review_wadf.json"),
        "--space",
        "flower",
        "--semantics",
        "kk",
    )
    assert code == 0
    assert "(accept|borderline|tendency_accept)" in out


def test_solve_unknown_semantics_exits_two(capsys, data_dir):
    code, _, err = run(
        capsys, "solve", str(data_dir / "even_loop.json"), "--semantics", "kk,magic"
    )
    assert code == 2
    assert "magic" in err


def test_solve_fitting_on_flower_exits_three(capsys, data_dir):
    code, _, err = run(
        capsys,
        "solve",
        str(data_dir / "even_loop.json"),
        "--space",
        "flower",
        "--approximator",
        "fitting",
    )
    assert code == 3


def test_compare_fitting_vs_ultimate(capsys, data_dir):
    code, out, _ = run(
        capsys,
        "compare",
        str(data_dir / "even_loop.json"),
        "--approximator-a",
        "fitting",
        "--approximator-b",
        "ultimate",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdicts"]["wf_a_leq_b"] is True
    assert payload["verdicts"]["stable_a_subset_b"] is True


def test_compare_interval_vs_flower_reports_gap(capsys, data_dir):
    code, out, _ = run(
        capsys,
        "compare",
        str(data_dir / "agent_theory.json"),
        "--space-a",
        "interval",
        "--approximator-a",
        "ultimate",
        "--space-b",
        "flower",
        "--approximator-b",
        "ultimate",
        "--semantics",
        "wf",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdicts"]["wf_a_leq_b"] is True
    assert payload["verdicts"]["wf_equal"] is False


def test_compare_identical_configs_report_equality(capsys, data_dir):
    code, out, _ = run(
        capsys,
        "compare",
        str(data_dir / "even_loop.json"),
        "--approximator-a",
        "ultimate",
        "--approximator-b",
        "ultimate",
    )
    assert code == 0
    assert "wf_equal: true" in out


def test_output_is_deterministic(capsys, data_dir):
    args = (
        "solve",
        str(data_dir / "agent_theory.json"),
        "--space",
        "flower",
        "--format",
        "json",
        "--seed",
        "7",
    )
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
