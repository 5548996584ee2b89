"""Approximators, stable revision, the four semantics, refinements."""

import random

import pytest

from genaft import (
    Approximator,
    ExactOperator,
    application_refinements,
    approximates_operator,
    approximation_violation,
    build_flower_framework,
    build_interval_framework,
    compute_semantics,
    grounding_refinements,
    is_application_refinement,
    is_grounding_refinement,
    is_prudent,
    is_reliable,
    is_terminal_wf,
    kripke_kleene,
    random_wf_strategy,
    run_wf_induction,
    set_id,
    stable_fixpoints,
    stable_revision,
    supported_fixpoints,
    ultimate_approximator,
    well_founded,
)
from genaft.errors import InvalidRefinementError, PreconditionError, ReliabilityError
from genaft.encoders import (
    ael_operator,
    fitting_approximator,
    lp_operator,
    lp_oracle,
    parse_program,
)
from corpus import agent_theory, random_program


@pytest.fixture(scope="module")
def agent():
    """Operator and both ultimate approximators of the agent theory."""
    op = ael_operator(agent_theory())
    ifw = build_interval_framework(op.domain)
    ffw = build_flower_framework(op.domain)
    return op, ifw, ultimate_approximator(ifw, op), ffw, ultimate_approximator(ffw, op)


def _interval_setup(program):
    op = lp_operator(program)
    fw = build_interval_framework(op.domain)
    return op, fw, fitting_approximator(program, fw), ultimate_approximator(fw, op)


# -- ultimate approximator ----------------------------------------------------


def test_constant_operator_ultimate_is_exact(fig_lattice):
    for space in (build_interval_framework, build_flower_framework):
        fw = space(fig_lattice)
        op = ExactOperator(fig_lattice, lambda x: "a")
        ua = ultimate_approximator(fw, op)
        for x in fw.enumerate_approximants():
            assert ua.apply(x) == fw.exact_approximant("a")
        assert supported_fixpoints(ua) == ["a"]
        assert stable_fixpoints(ua) == ["a"]


def test_agent_interval_ultimate_kk_wf_are_least(agent):
    op, ifw, ia, _, _ = agent
    least = ifw.least_approximant()
    assert kripke_kleene(ia) == least
    assert well_founded(ia) == least


def test_ultimate_kk_of_tautological_loop():
    program = parse_program(["p :- p", "p :- not p"])
    op, fw, fit, ult = _interval_setup(program)
    assert op.apply("{}") == "{p}" and op.apply("{p}") == "{p}"
    assert kripke_kleene(ult) == fw.exact_approximant("{p}")
    kk_fit = kripke_kleene(fit)
    assert (kk_fit.alb, kk_fit.aub) == ("{}", "{p}")


def test_approximates_operator(agent):
    op, ifw, ia, ffw, fa = agent
    assert approximates_operator(ia, op)
    assert approximates_operator(fa, op)


def test_fitting_approximates_the_consequence_operator():
    program = parse_program(["p :- not q", "q :- not p", "r :- p, q"])
    op, fw, fit, _ = _interval_setup(program)
    assert approximates_operator(fit, op)


def test_corrupted_map_fails_with_witness(fig_lattice):
    fw = build_interval_framework(fig_lattice)
    op = ExactOperator(fig_lattice, lambda x: x)

    def broken(x):
        return fw.exact_approximant("top")

    bad = Approximator(fw, broken)
    witness = approximation_violation(bad, op)
    assert witness is not None
    x, y = witness
    assert fw.approximates(x, y)
    assert not fw.approximates(bad.apply(x), op.apply(y))


# -- stable revision ----------------------------------------------------------


def test_even_loop_stable_revision_fixes_least():
    program = parse_program(["p :- not q", "q :- not p"])
    _, fw, fit, _ = _interval_setup(program)
    least = fw.least_approximant()
    assert stable_revision(fit, least) == least


def test_stable_revision_requires_reliability():
    program = parse_program(["p :- not p"])
    _, fw, fit, _ = _interval_setup(program)
    exact_p = fw.exact_approximant("{p}")
    assert not is_reliable(fit, exact_p)
    with pytest.raises(ReliabilityError):
        stable_revision(fit, exact_p)


def test_agent_flower_stable_revision_refines_the_aub(agent):
    op, _, _, ffw, fa = agent
    least = ffw.least_approximant()
    revised = stable_revision(fa, least)
    # hand enumeration: the ALB stays at no-knowledge, the AUB tightens
    # to the two belief states fixing q true (r known either way)
    qr = set_id([set_id(["p", "q", "r"]), set_id(["q", "r"])])
    q_only = set_id([set_id(["p", "q"]), set_id(["q"])])
    assert revised.alb == least.alb
    assert revised.aub == tuple(sorted((qr, q_only)))
    assert ffw.leq_p(least, revised) and revised != least


def test_exact_reliable_iff_supported():
    program = parse_program(["p :- p"])
    _, fw, fit, _ = _interval_setup(program)
    for y in fw.exact.elements:
        e = fw.exact_approximant(y)
        assert is_reliable(fit, e) == (fit.apply(e) == e)


# -- reliability and prudence ---------------------------------------------------


def test_least_approximant_reliable_and_prudent(agent):
    op, ifw, ia, ffw, fa = agent
    for fw, a in ((ifw, ia), (ffw, fa)):
        least = fw.least_approximant()
        assert is_reliable(a, least)
        assert is_prudent(a, least)


def test_kk_is_reliable_and_prudent():
    program = parse_program(["p :- not q", "q :- q"])
    _, fw, fit, ult = _interval_setup(program)
    for a in (fit, ult):
        kk = kripke_kleene(a)
        assert is_reliable(a, kk)
        assert is_prudent(a, kk)


def test_any_fixpoint_is_reliable():
    program = parse_program(["p :- not q", "q :- not p"])
    _, fw, fit, _ = _interval_setup(program)
    for x in fw.enumerate_approximants():
        if fit.apply(x) == x:
            assert is_reliable(fit, x)


# -- the four semantics ----------------------------------------------------------


def test_single_fact_program():
    program = parse_program(["p"])
    _, fw, fit, ult = _interval_setup(program)
    exact_p = fw.exact_approximant("{p}")
    assert kripke_kleene(fit) == exact_p
    assert kripke_kleene(ult) == exact_p
    assert supported_fixpoints(fit) == ["{p}"]
    assert stable_fixpoints(fit) == ["{p}"]


def test_positive_loop_semantics():
    program = parse_program(["p :- p"])
    _, fw, fit, _ = _interval_setup(program)
    assert supported_fixpoints(fit) == ["{p}", "{}"]
    assert stable_fixpoints(fit) == ["{}"]


def test_even_loop_semantics_and_oracle():
    program = parse_program(["p :- not q", "q :- not p"])
    _, fw, fit, _ = _interval_setup(program)
    oracle = lp_oracle(program)
    assert {set_id(s) for s in oracle.answer_sets} == set(stable_fixpoints(fit))
    assert supported_fixpoints(fit) == stable_fixpoints(fit)
    wf = well_founded(fit)
    assert wf == fw.least_approximant()
    assert set_id(oracle.wf_true) == wf.alb
    assert set_id(oracle.wf_possible) == wf.aub


def test_odd_loop_well_founded():
    program = parse_program(["p :- not p"])
    _, fw, fit, _ = _interval_setup(program)
    wf = well_founded(fit)
    assert (wf.alb, wf.aub) == ("{}", "{p}")
    assert stable_fixpoints(fit) == []
    oracle = lp_oracle(program)
    assert oracle.answer_sets == ()


def test_agent_flower_well_founded_is_the_intended_state(agent):
    op, _, _, ffw, fa = agent
    wf = well_founded(fa)
    kk = kripke_kleene(fa)
    intended = set_id([set_id(["p", "q"]), set_id(["q"])])  # q true, r false
    assert ffw.is_exact(wf)
    assert ffw.exact_value(wf) == intended
    assert kk == wf
    assert op.apply(intended) == intended


def test_compute_semantics_bundle():
    program = parse_program(["p :- not q"])
    _, fw, fit, _ = _interval_setup(program)
    result = compute_semantics(fit)
    assert result.kk == fw.exact_approximant("{p}")
    assert result.wf == result.kk
    assert result.supported == ["{p}"] and result.stable == ["{p}"]
    payload = result.to_json(fw)
    assert payload["kk"]["members"] == ["{p}"]
    with pytest.raises(PreconditionError):
        compute_semantics(fit, ["nonsense"])


def test_kk_below_wf_and_stable_subset_supported():
    rng = random.Random(11)
    for _ in range(25):
        program = random_program(("p", "q", "r"), rng)
        _, fw, fit, ult = _interval_setup(program)
        for a in (fit, ult):
            assert fw.leq_p(kripke_kleene(a), well_founded(a))
            assert set(stable_fixpoints(a)) <= set(supported_fixpoints(a))


def test_fitting_below_ultimate_pointwise():
    rng = random.Random(5)
    for _ in range(10):
        program = random_program(("p", "q"), rng)
        _, fw, fit, ult = _interval_setup(program)
        for x in fw.enumerate_approximants():
            assert fw.leq_p(fit.apply(x), ult.apply(x))


def test_reliable_prudent_closed_under_revision():
    program = parse_program(["p :- not q", "q :- r", "r :- p"])
    _, fw, fit, _ = _interval_setup(program)
    for x in fw.enumerate_approximants():
        if is_reliable(fit, x) and is_prudent(fit, x):
            y = stable_revision(fit, x)
            assert fw.leq_p(x, y)
            assert is_reliable(fit, y) and is_prudent(fit, y)


# -- refinements ------------------------------------------------------------------


def test_image_is_application_refinement():
    program = parse_program(["p :- not q"])
    _, fw, fit, _ = _interval_setup(program)
    least = fw.least_approximant()
    assert is_application_refinement(fit, least, fit.apply(least))


def test_incomparable_is_no_refinement():
    program = parse_program(["p :- not q", "q :- not p"])
    _, fw, fit, _ = _interval_setup(program)
    x = fw.recompose("{p}", "{p}")
    y = fw.recompose("{q}", "{q}")
    assert not is_application_refinement(fit, x, y)
    assert not is_grounding_refinement(fit, x, y)


def test_agent_grounding_step_not_knowing_p(agent):
    op, _, _, ffw, fa = agent
    least = ffw.least_approximant()
    interps = [set_id(s) for s in ([], ["q"], ["r"], ["q", "r"])]
    unaware_of_p = tuple(sorted(set_id([i]) for i in interps))
    refined = ffw.recompose(least.alb, unaware_of_p)
    assert is_grounding_refinement(fa, least, refined)
    assert refined != least and ffw.leq_p(least, refined)


def test_grounding_candidates_are_grounding_refinements(agent):
    op, _, _, ffw, fa = agent
    least = ffw.least_approximant()
    for y in grounding_refinements(fa, least):
        assert is_grounding_refinement(fa, least, y)
        assert ffw.leq_p(least, y) and y != least


# -- well-founded inductions --------------------------------------------------------


def test_default_induction_reaches_wf(agent):
    op, _, _, ffw, fa = agent
    trace = run_wf_induction(fa)
    assert trace[-1] == well_founded(fa)
    assert len(trace) > 1


def test_random_strategies_converge(agent):
    op, _, _, ffw, fa = agent
    wf = well_founded(fa)
    for seed in range(6):
        trace = run_wf_induction(fa, random_wf_strategy(random.Random(seed)))
        assert trace[-1] == wf


def test_trace_on_terminal_start_has_length_one():
    program = parse_program(["p"])
    _, fw, fit, _ = _interval_setup(program)
    wf = well_founded(fit)
    assert is_terminal_wf(fit, wf)
    assert run_wf_induction(fit)[-1] == wf
    assert run_wf_induction(fit, start=wf) == [wf]


def test_terminal_iff_no_refinements(agent):
    op, _, _, ffw, fa = agent
    wf = well_founded(fa)
    assert is_terminal_wf(fa, wf)
    assert not application_refinements(fa, wf)
    assert not grounding_refinements(fa, wf)
    assert not is_terminal_wf(fa, ffw.least_approximant())


def test_bad_strategy_raises(agent):
    op, _, _, ffw, fa = agent

    def rogue(step, x, apps, grounds):
        return ffw.exact_approximant(ffw.exact.elements[0])

    with pytest.raises(InvalidRefinementError):
        run_wf_induction(fa, rogue)


def test_every_induction_step_is_a_refinement(agent):
    op, _, _, ffw, fa = agent
    trace = run_wf_induction(fa, random_wf_strategy(random.Random(3)))
    for x, y in zip(trace, trace[1:]):
        assert is_application_refinement(fa, x, y) or is_grounding_refinement(fa, x, y)
        assert ffw.leq_p(x, y)
