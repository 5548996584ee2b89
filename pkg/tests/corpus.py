"""Shared instance builders for the test suite.

Houses the bounded rule grammar the exhaustive logic-programming sweeps
run over, seeded random generators for programs and bounded-complete
cpos, and the two worked instances (the introspective-agent theory and
the paper-review wADF) used throughout.
"""

from __future__ import annotations

import itertools
import random

from genaft import FinitePoset
from genaft.encoders import AelTheory, NormalLogicProgram, Rule, Wadf
from genaft.flowers import FlowerFramework


# -- worked instances --------------------------------------------------------

VEE = {"elements": ["bot", "a", "b"], "hasse": [["bot", "a"], ["bot", "b"]]}
VEE_TOP = {
    "elements": ["bot", "a", "b", "top"],
    "hasse": [["bot", "a"], ["bot", "b"], ["a", "top"], ["b", "top"]],
}


def vee_poset() -> FinitePoset:
    """Least element below two incomparable points: bounded-complete,
    not a complete lattice."""
    return FinitePoset.from_json(VEE)


def vee_lattice() -> FinitePoset:
    return FinitePoset.from_json(VEE_TOP)


def agent_theory() -> AelTheory:
    """q holds iff p is not known; r holds iff q is not known."""
    return AelTheory.from_json(
        {
            "atoms": ["p", "q", "r"],
            "sentences": [
                ["iff", ["atom", "q"], ["not", ["K", ["atom", "p"]]]],
                ["iff", ["atom", "r"], ["not", ["K", ["atom", "q"]]]],
            ],
        }
    )


REVIEW_VALUES = {
    "elements": [
        "accept",
        "borderline",
        "reject",
        "tendency_accept",
        "tendency_reject",
        "indifferent",
    ],
    "hasse": [
        ["indifferent", "tendency_accept"],
        ["indifferent", "tendency_reject"],
        ["tendency_accept", "accept"],
        ["tendency_accept", "borderline"],
        ["tendency_reject", "borderline"],
        ["tendency_reject", "reject"],
    ],
}


def review_values() -> FinitePoset:
    return FinitePoset.from_json(REVIEW_VALUES)


def review_wadf() -> Wadf:
    """A paper's status jointly supported by significance and methodology."""
    return Wadf.from_json(
        {
            "arguments": ["significance", "methodology", "status"],
            "values": REVIEW_VALUES,
            "acceptance": {
                "significance": ["const", "accept"],
                "methodology": ["const", "borderline"],
                "status": ["glb", ["parent", "significance"], ["parent", "methodology"]],
            },
        }
    )


# -- the bounded rule grammar ------------------------------------------------


def _bodies(atoms: tuple[str, ...], max_literals: int):
    """All bodies with at most `max_literals` signed, distinct atoms."""
    yield (frozenset(), frozenset())
    for size in range(1, max_literals + 1):
        for picked in itertools.combinations(atoms, size):
            for signs in itertools.product((False, True), repeat=size):
                pos = frozenset(a for a, s in zip(picked, signs) if not s)
                neg = frozenset(a for a, s in zip(picked, signs) if s)
                yield (pos, neg)


def single_rule_programs(atoms: tuple[str, ...], max_literals: int = 2):
    """Every program giving each atom at most one rule with a short body."""
    options = [None] + list(_bodies(atoms, max_literals))
    for combo in itertools.product(options, repeat=len(atoms)):
        rules = tuple(
            Rule(head, pos, neg)
            for head, body in zip(atoms, combo)
            if body is not None
            for pos, neg in [body]
        )
        yield NormalLogicProgram(atoms, rules)


def two_rule_programs(atoms: tuple[str, ...]):
    """Every program giving each atom up to two unit-body rules; this is
    where the classic even/odd loops and their overlaps live."""
    bodies = list(_bodies(atoms, 1))
    per_atom = (
        [()]
        + [(b,) for b in bodies]
        + [pair for pair in itertools.combinations(bodies, 2)]
    )
    for combo in itertools.product(per_atom, repeat=len(atoms)):
        rules = tuple(
            Rule(head, pos, neg)
            for head, chosen in zip(atoms, combo)
            for pos, neg in chosen
        )
        yield NormalLogicProgram(atoms, rules)


def grammar_programs():
    """The exhaustive corpus: single-rule programs over up to three
    atoms plus double-rule programs over two."""
    yield from single_rule_programs(("p",))
    yield from single_rule_programs(("p", "q"))
    yield from single_rule_programs(("p", "q", "r"))
    yield from two_rule_programs(("p", "q"))


def random_program(atoms: tuple[str, ...], rng: random.Random) -> NormalLogicProgram:
    rules = []
    for head in atoms:
        for _ in range(rng.randint(0, 2)):
            size = rng.randint(0, min(3, len(atoms)))
            picked = rng.sample(atoms, size)
            pos = frozenset(a for a in picked if rng.random() < 0.5)
            neg = frozenset(picked) - pos
            rules.append(Rule(head, pos, frozenset(neg)))
    unique = tuple(dict.fromkeys(rules))
    return NormalLogicProgram(tuple(sorted(atoms)), unique)


# -- mutants for the verification suite ----------------------------------------


class SwappedRecompose(FlowerFramework):
    """Mutant: two recompositions exchanged; decompose-recompose breaks."""

    def __init__(self, exact, swap_a="a", swap_b="bot", **kw):
        super().__init__(exact, **kw)
        self._swap_a, self._swap_b = swap_a, swap_b

    def recompose(self, l, u):
        x = super().recompose(l, u)
        if (x.alb, x.aub) == (self._swap_a, (self._swap_a,)):
            return super().recompose(self._swap_b, (self._swap_b,))
        if (x.alb, x.aub) == (self._swap_b, (self._swap_b,)):
            return super().recompose(self._swap_a, (self._swap_a,))
        return x


class NoSideCondition(FlowerFramework):
    """Mutant: the composition order compares lower closures only,
    allowing an antichain below a single element."""

    def bound_leq(self, side1, b1, side2, b2):
        mask1 = self.exact.down_mask(b1) if side1 == "L" else self.aub_mask(b1)
        mask2 = self.exact.down_mask(b2) if side2 == "L" else self.aub_mask(b2)
        return mask1 & ~mask2 == 0


# -- random order structures ---------------------------------------------------


def random_poset(rng: random.Random, max_elements: int = 7) -> FinitePoset:
    n = rng.randint(1, max_elements)
    names = [f"e{i}" for i in range(n)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                pairs.append((names[i], names[j]))
    return FinitePoset(names, pairs)


def random_bounded_complete_cpo(rng: random.Random, max_elements: int = 7) -> FinitePoset:
    """Rejection-sampled general shapes with a rooted-tree fallback;
    trees are always bounded-complete (glbs are deepest common
    ancestors), so the function cannot fail."""
    for _ in range(60):
        n = rng.randint(1, max_elements)
        names = [f"e{i}" for i in range(n)]
        pairs = [("e0", x) for x in names[1:]]
        for i in range(1, n):
            for j in range(i + 1, n):
                if rng.random() < 0.35:
                    pairs.append((names[i], names[j]))
        poset = FinitePoset(names, pairs)
        if poset.classify().is_bounded_complete:
            return poset
    n = rng.randint(1, max_elements)
    names = [f"e{i}" for i in range(n)]
    pairs = [(names[rng.randint(0, i - 1)], names[i]) for i in range(1, n)]
    return FinitePoset(names, pairs)
