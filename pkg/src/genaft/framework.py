"""Approximation frameworks: composition posets plus their axioms.

A framework bundles an exact poset with two decomposition spaces L (the
approximation lower bounds) and U (the approximation upper bounds), one
order over their union, and the recomposition that turns a compatible
(ALB, AUB) pair back into an approximant.  Approximants are carried in
canonical (alb, aub) form and never materialised as member lists unless
asked, because upper decomposition spaces grow combinatorially.

The checkers in this module verify, by enumeration where feasible and
by seeded sampling otherwise, the five composition-poset requirements,
the four interlattice properties, the well-formedness preamble, and the
compatibility of the approximates-relation.  Failures carry an explicit
counterexample; nothing raises.
"""

from __future__ import annotations

import itertools
import json
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import RecomposeUndefinedError
from .posets import FinitePoset, _bits


@dataclass(frozen=True)
class Approximant:
    """A canonical (ALB, AUB) pair owned by a framework.

    Equality includes the owning framework (by identity): approximants
    from different frameworks never compare equal.
    """

    space: "ApproximationFramework" = field(repr=False)
    alb: object
    aub: object

    def __str__(self) -> str:
        return self.space.format_approximant(self)

    def __hash__(self):
        return hash((id(self.space), self.alb, self.aub))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verified axiom.

    status is "pass" for exhaustive verification, "sampled" when the
    quantifiers were only probed with seeded samples (and no violation
    was found), and "fail" with a counterexample otherwise.
    """

    axiom: str
    status: str
    counterexample: dict | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def report_ok(results: Iterable[CheckResult]) -> bool:
    return all(r.ok for r in results)


def report_to_json(results: Iterable[CheckResult]) -> list[dict]:
    out = []
    for r in results:
        entry: dict = {"axiom": r.axiom, "status": r.status}
        if r.counterexample is not None:
            entry["counterexample"] = r.counterexample
        if r.note:
            entry["note"] = r.note
        out.append(entry)
    return out


def report_dumps(results: Iterable[CheckResult]) -> str:
    return json.dumps(report_to_json(results), sort_keys=True, indent=2)


@dataclass(frozen=True)
class Caps:
    """Enumeration budgets for the exhaustive checkers."""

    max_approximants: int = 20000
    max_subset_pool: int = 12        # enumerate subsets of pools up to this size
    max_chains: int = 100_000        # enumerate chains up to this many
    max_pairs: int = 250_000         # full product scans up to this many tuples
    samples: int = 150               # probes per sampled quantifier


DEFAULT_CAPS = Caps()


class ApproximationFramework(ABC):
    """Shared machinery for concrete approximation frameworks."""

    kind: str = "abstract"

    def __init__(self, exact: FinitePoset):
        self.exact = exact

    # -- the combined order over L and U ----------------------------------

    @abstractmethod
    def bound_leq(self, side1: str, b1, side2: str, b2) -> bool:
        """The order on L u U; sides are "L" or "U"."""

    @abstractmethod
    def same_bound(self, side1: str, b1, side2: str, b2) -> bool:
        """Identity of bounds across sides (L and U may share a carrier)."""

    def alb_leq(self, l1, l2) -> bool:
        return self.bound_leq("L", l1, "L", l2)

    def aub_leq(self, u1, u2) -> bool:
        return self.bound_leq("U", u1, "U", u2)

    def cross_leq(self, l, u) -> bool:
        return self.bound_leq("L", l, "U", u)

    # -- decomposition space structure -------------------------------------

    def albs(self) -> Sequence:
        return self.exact.elements

    @abstractmethod
    def lub_L(self, ls: Iterable) -> object | None:
        """lub in the bounded-complete cpo L; None when unbounded."""

    @abstractmethod
    def glb_U(self, us: Iterable):
        """glb in the complete lattice U; total."""

    @abstractmethod
    def lub_U(self, us: Iterable): ...

    def L_least(self):
        return self.exact.least()

    @abstractmethod
    def U_least(self): ...

    @abstractmethod
    def U_greatest(self): ...

    @abstractmethod
    def least_aub_above(self, l):
        """The glb of {u in U : l compatible with u}; exists by the
        interlattice glb property and starts the upper inductions."""

    @abstractmethod
    def enumerate_aubs(self) -> list | None:
        """All of U, or None when U is too large to materialise."""

    @abstractmethod
    def sample_aub(self, rng: random.Random): ...

    # -- approximants ------------------------------------------------------

    @abstractmethod
    def recompose(self, l, u) -> Approximant:
        """Combine a compatible ALB/AUB pair into a canonical approximant.

        Raises RecomposeUndefinedError when the pair is incompatible.
        """

    @abstractmethod
    def members_mask(self, x: Approximant) -> int: ...

    @abstractmethod
    def exact_approximant(self, y: str) -> Approximant: ...

    @abstractmethod
    def lub_p(self, xs: Sequence[Approximant]) -> Approximant | None:
        """lub in the approximation space, or None when it does not exist."""

    @abstractmethod
    def format_approximant(self, x: Approximant) -> str: ...

    @abstractmethod
    def ultimate_map(self, table: Callable[[str], str]) -> Callable[[Approximant], Approximant]:
        """The most precise approximator of the exact map `table`."""

    # -- shared derived operations ----------------------------------------

    def leq_p(self, x: Approximant, y: Approximant) -> bool:
        """Precision order via nested bounds.

        For the concrete spaces in this library this coincides with
        containment of the approximated sets; the approximates-relation
        checker verifies the agreement.
        """
        return self.alb_leq(x.alb, y.alb) and self.aub_leq(y.aub, x.aub)

    def members(self, x: Approximant) -> frozenset[str]:
        return self.exact.set_of(self.members_mask(x))

    def approximates(self, x: Approximant, y: str) -> bool:
        return bool(self.members_mask(x) >> self.exact.index(y) & 1)

    def least_approximant(self) -> Approximant:
        return self.recompose(self.L_least(), self.U_greatest())

    def is_maximal(self, x: Approximant) -> bool:
        """Precision-maximality.

        Every approximated element yields an exact approximant above x,
        so x is maximal exactly when it approximates a single element.
        """
        return self.members_mask(x).bit_count() == 1

    def maximal_above(self, x: Approximant) -> list[Approximant]:
        out = []
        for y in self.exact.elements:
            e = self.exact_approximant(y)
            if self.leq_p(x, e):
                out.append(e)
        return out

    def is_exact(self, x: Approximant) -> bool:
        """Maximal, or below exactly one maximal approximant."""
        if self.is_maximal(x):
            return True
        return len(self.maximal_above(x)) == 1

    def exact_value(self, x: Approximant) -> str | None:
        """The unique approximated element of an exact approximant."""
        mask = self.members_mask(x)
        if mask.bit_count() != 1:
            return None
        return self.exact.elements[mask.bit_length() - 1]

    def enumerate_approximants(self, cap: int | None = None) -> list[Approximant] | None:
        """All approximants, via (ALB, AUB) canonical pairs; None over cap."""
        cap = DEFAULT_CAPS.max_approximants if cap is None else cap
        aubs = self.enumerate_aubs()
        if aubs is None:
            return None
        out = []
        for u in aubs:
            for l in self.albs():
                if not self.cross_leq(l, u):
                    continue
                x = self.recompose(l, u)
                if x.alb == l and x.aub == u:
                    out.append(x)
                    if len(out) > cap:
                        return None
        return out

    def sample_approximant(self, rng: random.Random) -> Approximant:
        for _ in range(64):
            u = self.sample_aub(rng)
            compatible = [l for l in self.albs() if self.cross_leq(l, u)]
            if compatible:
                return self.recompose(rng.choice(compatible), u)
        return self.least_approximant()

    def approximant_from_members(self, members: Iterable[str]) -> Approximant:
        """The approximant with exactly these members, when one exists."""
        raise NotImplementedError

    def to_json(self, x: Approximant, *, expand_below: int = 64) -> dict:
        mask = self.members_mask(x)
        data: dict = {
            "alb": x.alb,
            "aub": list(x.aub) if isinstance(x.aub, tuple) else x.aub,
        }
        if mask.bit_count() <= expand_below:
            data["members"] = sorted(self.members(x))
        return data


# ---------------------------------------------------------------------------
# quantifier helpers


def _aub_pool(fw, caps: Caps, rng) -> tuple[list, bool]:
    full = fw.enumerate_aubs()
    if full is not None:
        return full, True
    return [fw.sample_aub(rng) for _ in range(caps.samples)], False


def _approximant_pool(fw, caps: Caps, rng) -> tuple[list, bool]:
    full = fw.enumerate_approximants(caps.max_approximants)
    if full is not None:
        return full, True
    return [fw.sample_approximant(rng) for _ in range(caps.samples)], False


def _subsets(pool: list, caps: Caps, rng, *, nonempty: bool):
    """(subset, exhaustive) pairs: all subsets of small pools, else probes."""
    if len(pool) <= caps.max_subset_pool:
        start = 1 if nonempty else 0
        for bits in range(start, 1 << len(pool)):
            yield [pool[i] for i in _bits(bits)], True
    else:
        yield pool, False
        for x in pool:
            yield [x], False
        for _ in range(caps.samples):
            k = rng.randint(1 if nonempty else 0, min(len(pool), 8))
            yield rng.sample(pool, k), False


def _chains(leq, pool: list, caps: Caps, rng):
    """(chain, exhaustive) pairs; chains grown upward so each set appears once."""
    if len(pool) <= caps.max_subset_pool:
        total = 0
        stack: list[list] = [[x] for x in pool]
        emitted: list[tuple[list, bool]] = [([], True)]
        while stack:
            chain = stack.pop()
            emitted.append((chain, True))
            total += 1
            if total > caps.max_chains:
                break
            last = chain[-1]
            for y in pool:
                if y != last and leq(last, y):
                    stack.append(chain + [y])
        if total <= caps.max_chains:
            yield from emitted
            return
    for _ in range(caps.samples):
        chain = [rng.choice(pool)]
        for _ in range(6):
            ups = [y for y in pool if y != chain[-1] and leq(chain[-1], y)]
            if not ups:
                break
            chain.append(rng.choice(ups))
        yield chain, False


def _result(axiom: str, exhaustive: bool, counterexample: dict | None, note: str = "") -> CheckResult:
    if counterexample is not None:
        return CheckResult(axiom, "fail", counterexample, note)
    return CheckResult(axiom, "pass" if exhaustive else "sampled", None, note)


def _show(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, Approximant):
        return str(value)
    if isinstance(value, (tuple, frozenset)):
        return "{" + ",".join(sorted(map(str, value))) + "}"
    return str(value)


# ---------------------------------------------------------------------------
# the checkers


def check_composition_poset(
    fw: ApproximationFramework,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> list[CheckResult]:
    """The five composition-poset requirements, one result per bullet."""
    rng = rng or random.Random(0)
    albs = list(fw.albs())
    aubs, u_exhaustive = _aub_pool(fw, caps, rng)
    results = []

    def w(**kw):
        return {k: _show(v) for k, v in kw.items()}

    exhaustive2 = u_exhaustive and len(albs) * len(aubs) <= caps.max_pairs
    if exhaustive2:
        lu_pairs = [(l, u) for l in albs for u in aubs]
    else:
        lu_pairs = [(rng.choice(albs), rng.choice(aubs)) for _ in range(caps.samples)]

    cx = None
    for l, u in lu_pairs:
        if fw.cross_leq(l, u):
            try:
                fw.recompose(l, u)
            except RecomposeUndefinedError:
                cx = w(alb=l, aub=u)
                break
    results.append(_result("composition.1_defined_when_compatible", exhaustive2, cx))

    cx = None
    for l, u in lu_pairs:
        if not fw.cross_leq(l, u):
            continue
        x = fw.recompose(l, u)
        if not (fw.alb_leq(l, x.alb) and fw.aub_leq(x.aub, u)):
            cx = w(alb=l, aub=u, got_alb=x.alb, got_aub=x.aub)
            break
    results.append(_result("composition.2_recompose_tightens_bounds", exhaustive2, cx))

    exhaustive3 = u_exhaustive and len(albs) ** 2 * len(aubs) <= caps.max_pairs
    if exhaustive3:
        triples = (
            (l1, l2, u) for l1 in albs for l2 in albs for u in aubs
        )
    else:
        triples = (
            (rng.choice(albs), rng.choice(albs), rng.choice(aubs))
            for _ in range(caps.samples * 4)
        )
    cx = None
    for l1, l2, u in triples:
        if not (fw.alb_leq(l1, l2) and fw.cross_leq(l1, u) and fw.cross_leq(l2, u)):
            continue
        if not fw.leq_p(fw.recompose(l1, u), fw.recompose(l2, u)):
            cx = w(alb1=l1, alb2=l2, aub=u)
            break
    results.append(_result("composition.3_monotone_in_alb", exhaustive3, cx))

    exhaustive4 = u_exhaustive and len(aubs) ** 2 * len(albs) <= caps.max_pairs
    if exhaustive4:
        triples = (
            (l, u1, u2) for u1 in aubs for u2 in aubs for l in albs
        )
    else:
        triples = (
            (rng.choice(albs), rng.choice(aubs), rng.choice(aubs))
            for _ in range(caps.samples * 4)
        )
    cx = None
    for l, u1, u2 in triples:
        if not (fw.aub_leq(u1, u2) and fw.cross_leq(l, u1)):
            continue
        if not fw.leq_p(fw.recompose(l, u2), fw.recompose(l, u1)):
            cx = w(alb=l, aub1=u1, aub2=u2)
            break
    results.append(_result("composition.4_antitone_in_aub", exhaustive4, cx))

    xs, x_exhaustive = _approximant_pool(fw, caps, rng)
    cx = None
    for x in xs:
        if fw.recompose(x.alb, x.aub) != x:
            cx = w(approximant=x)
            break
    results.append(_result("composition.5_decompose_recompose_identity", x_exhaustive, cx))
    return results


def check_chain_ilp(
    fw: ApproximationFramework,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> CheckResult:
    """Chains of L bounded by some u have their lub below that u."""
    rng = rng or random.Random(0)
    albs = list(fw.albs())
    aubs, exhaustive = _aub_pool(fw, caps, rng)
    for chain, chain_exhaustive in _chains(fw.alb_leq, albs, caps, rng):
        exhaustive = exhaustive and chain_exhaustive
        bounded_by = [u for u in aubs if all(fw.cross_leq(l, u) for l in chain)]
        if not bounded_by:
            continue
        lub = fw.lub_L(chain) if chain else fw.L_least()
        for u in bounded_by:
            if lub is None or not fw.cross_leq(lub, u):
                return CheckResult(
                    "chain_interlattice_lub",
                    "fail",
                    {"chain": [_show(c) for c in chain], "aub": _show(u), "lub": _show(lub)},
                )
    return _result("chain_interlattice_lub", exhaustive, None)


def check_weak_ilp(
    fw: ApproximationFramework,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> CheckResult:
    """New ALB knowledge compatible with the AUB joins with the old ALB."""
    rng = rng or random.Random(0)
    xs, exhaustive = _approximant_pool(fw, caps, rng)
    for x in xs:
        for l in fw.albs():
            if not fw.cross_leq(l, x.aub):
                continue
            lub = fw.lub_L([x.alb, l])
            if lub is None or not fw.cross_leq(lub, x.aub):
                return CheckResult(
                    "weak_interlattice_lub",
                    "fail",
                    {"approximant": _show(x), "alb": _show(l), "lub": _show(lub)},
                )
    return _result("weak_interlattice_lub", exhaustive, None)


def check_abstract_ilp(
    fw: ApproximationFramework,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> CheckResult:
    """Approximants sharing an AUB have lubs that keep that AUB.

    Quantified over non-empty sets: the literal empty case degenerates
    to the least approximant and carries no content.  Each shared-AUB
    group is recovered from L alone, since an approximant is its ALB
    once the AUB is fixed.
    """
    rng = rng or random.Random(0)
    aubs, exhaustive = _aub_pool(fw, caps, rng)
    for u in aubs:
        group = []
        for l in fw.albs():
            if fw.cross_leq(l, u):
                x = fw.recompose(l, u)
                if x.aub == u:
                    group.append(x)
        for subset, sub_exhaustive in _subsets(group, caps, rng, nonempty=True):
            if not subset:
                continue
            exhaustive = exhaustive and sub_exhaustive
            lub = fw.lub_p(subset)
            expected_alb = fw.lub_L([x.alb for x in subset])
            if (
                lub is None
                or lub.aub != u
                or expected_alb is None
                or lub.alb != expected_alb
            ):
                return CheckResult(
                    "abstract_interlattice_lub",
                    "fail",
                    {
                        "aub": _show(u),
                        "albs": [_show(x.alb) for x in subset],
                        "lub": _show(lub),
                    },
                )
    return _result("abstract_interlattice_lub", exhaustive, None)


def check_glb_property(
    fw: ApproximationFramework,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> CheckResult:
    """An ALB below every member of an AUB set is below the set's glb.

    For each ALB the compatible AUBs form one pool; every qualifying set
    is a subset of it.  Small pools are enumerated in full.  Large pools
    are covered by checking the whole pool plus seeded random subsets:
    the whole pool dominates every subset because glbs in the verified
    complete lattice U are antitone in the set.
    """
    rng = rng or random.Random(0)
    full_aubs = fw.enumerate_aubs()
    exhaustive = full_aubs is not None
    note = ""
    for l in fw.albs():
        if full_aubs is not None:
            pool = [u for u in full_aubs if fw.cross_leq(l, u)]
        else:
            pool = [
                u
                for u in (fw.sample_aub(rng) for _ in range(caps.samples))
                if fw.cross_leq(l, u)
            ]
        if len(pool) > caps.max_subset_pool:
            note = "large pools covered by the dominating full set plus probes"
        for subset, _ in _subsets(pool, caps, rng, nonempty=False):
            glb = fw.glb_U(subset)
            if not fw.cross_leq(l, glb):
                return CheckResult(
                    "interlattice_glb",
                    "fail",
                    {"alb": _show(l), "aubs": [_show(u) for u in subset], "glb": _show(glb)},
                )
    return _result("interlattice_glb", exhaustive, None, note)


def check_preamble(
    fw: ApproximationFramework,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> list[CheckResult]:
    """Well-formedness of the combined order and the two spaces."""
    rng = rng or random.Random(0)
    results = []
    albs = list(fw.albs())
    aubs, u_exhaustive = _aub_pool(fw, caps, rng)
    bounds = [("L", l) for l in albs] + [("U", u) for u in aubs]
    exhaustive2 = u_exhaustive and len(bounds) ** 2 <= caps.max_pairs

    cx = None
    for s, b in bounds:
        if not fw.bound_leq(s, b, s, b):
            cx = {"bound": f"{s}:{_show(b)}"}
            break
    results.append(_result("preamble.order_reflexive", u_exhaustive, cx))

    if exhaustive2:
        pairs = itertools.combinations(bounds, 2)
    else:
        pairs = ((rng.choice(bounds), rng.choice(bounds)) for _ in range(caps.samples * 4))
    cx = None
    for (s1, b1), (s2, b2) in pairs:
        if fw.same_bound(s1, b1, s2, b2):
            continue
        if fw.bound_leq(s1, b1, s2, b2) and fw.bound_leq(s2, b2, s1, b1):
            cx = {"bound1": f"{s1}:{_show(b1)}", "bound2": f"{s2}:{_show(b2)}"}
            break
    results.append(_result("preamble.order_antisymmetric", exhaustive2, cx))

    exhaustive3 = u_exhaustive and len(bounds) ** 3 <= caps.max_pairs
    if exhaustive3:
        triples = itertools.product(bounds, repeat=3)
    else:
        triples = (
            (rng.choice(bounds), rng.choice(bounds), rng.choice(bounds))
            for _ in range(caps.samples * 6)
        )
    cx = None
    for (s1, b1), (s2, b2), (s3, b3) in triples:
        if (
            fw.bound_leq(s1, b1, s2, b2)
            and fw.bound_leq(s2, b2, s3, b3)
            and not fw.bound_leq(s1, b1, s3, b3)
        ):
            cx = {
                "bound1": f"{s1}:{_show(b1)}",
                "bound2": f"{s2}:{_show(b2)}",
                "bound3": f"{s3}:{_show(b3)}",
            }
            break
    results.append(_result("preamble.order_transitive", exhaustive3, cx))

    bot = fw.L_least()
    cx = None
    if bot is None:
        cx = {"missing": "least element of L"}
    else:
        for s, b in bounds:
            if not fw.bound_leq("L", bot, s, b):
                cx = {"bound": f"{s}:{_show(b)}"}
                break
    results.append(_result("preamble.least_in_L", u_exhaustive, cx))

    top = fw.U_greatest()
    cx = None
    for s, b in bounds:
        if not fw.bound_leq(s, b, "U", top):
            cx = {"bound": f"{s}:{_show(b)}"}
            break
    results.append(_result("preamble.greatest_in_U", u_exhaustive, cx))

    cls = fw.exact.classify()
    cx = None if cls.is_bounded_complete else {"exact_space": "not bounded-complete"}
    results.append(_result("preamble.L_bounded_complete_cpo", True, cx))

    # U must be a complete lattice: bottom, top, and correct binary
    # meets/joins suffice in the finite case (arbitrary glbs/lubs fold).
    lattice_exhaustive = u_exhaustive and len(aubs) ** 3 <= caps.max_pairs
    if lattice_exhaustive:
        upairs = itertools.combinations_with_replacement(aubs, 2)
    else:
        upairs = ((rng.choice(aubs), rng.choice(aubs)) for _ in range(caps.samples))
    cx = None
    for u1, u2 in upairs:
        meet, join = fw.glb_U([u1, u2]), fw.lub_U([u1, u2])
        if not (
            fw.aub_leq(meet, u1)
            and fw.aub_leq(meet, u2)
            and fw.aub_leq(u1, join)
            and fw.aub_leq(u2, join)
        ):
            cx = {"aub1": _show(u1), "aub2": _show(u2)}
            break
        witnesses = aubs if lattice_exhaustive else [rng.choice(aubs) for _ in range(16)]
        for v in witnesses:
            if fw.aub_leq(v, u1) and fw.aub_leq(v, u2) and not fw.aub_leq(v, meet):
                cx = {"aub1": _show(u1), "aub2": _show(u2), "below_both": _show(v)}
                break
            if fw.aub_leq(u1, v) and fw.aub_leq(u2, v) and not fw.aub_leq(join, v):
                cx = {"aub1": _show(u1), "aub2": _show(u2), "above_both": _show(v)}
                break
        if cx:
            break
    if cx is None:
        bot_u, top_u = fw.U_least(), fw.U_greatest()
        for u in aubs:
            if not (fw.aub_leq(bot_u, u) and fw.aub_leq(u, top_u)):
                cx = {"aub": _show(u)}
                break
    results.append(_result("preamble.U_complete_lattice", lattice_exhaustive, cx))
    return results


def check_approximates_relation(
    fw: ApproximationFramework,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> list[CheckResult]:
    """The four compatibility requirements on the approximates-relation."""
    rng = rng or random.Random(0)
    results = []
    xs, exhaustive = _approximant_pool(fw, caps, rng)
    pair_exhaustive = exhaustive and len(xs) ** 2 <= caps.max_pairs
    if pair_exhaustive:
        pair_iter = itertools.permutations(xs, 2)
    else:
        pair_iter = ((rng.choice(xs), rng.choice(xs)) for _ in range(caps.samples * 4))

    cx = None
    for x, y in pair_iter:
        if fw.leq_p(x, y) and fw.members_mask(y) & ~fw.members_mask(x):
            cx = {"less_precise": _show(x), "more_precise": _show(y)}
            break
    results.append(_result("approximates.1_antitone_in_precision", pair_exhaustive, cx))

    top = fw.U_greatest()
    cx = None
    for l in fw.albs():
        mask = fw.members_mask(fw.recompose(l, top))
        closed = 0
        for i in _bits(mask):
            closed |= fw.exact._up[i]
        if closed != mask:
            cx = {"alb": _show(l)}
            break
    results.append(_result("approximates.2_full_aub_upclosed", True, cx))

    bot = fw.L_least()
    aubs, aub_exhaustive = _aub_pool(fw, caps, rng)
    cx = None
    for u in aubs:
        if not fw.cross_leq(bot, u):
            continue
        mask = fw.members_mask(fw.recompose(bot, u))
        closed = 0
        for i in _bits(mask):
            closed |= fw.exact._down[i]
        if closed != mask:
            cx = {"aub": _show(u)}
            break
    results.append(_result("approximates.3_least_alb_downclosed", aub_exhaustive, cx))

    cx = None
    for x in xs:
        if fw.is_exact(x) != (fw.members_mask(x).bit_count() == 1):
            cx = {"approximant": _show(x)}
            break
    results.append(_result("approximates.4_exact_iff_unique", exhaustive, cx))
    return results


def check_framework(
    fw: ApproximationFramework,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> list[CheckResult]:
    """Every framework axiom in one report."""
    rng = rng or random.Random(0)
    results = []
    results.extend(check_preamble(fw, caps, rng))
    results.extend(check_composition_poset(fw, caps, rng))
    results.append(check_chain_ilp(fw, caps, rng))
    results.append(check_weak_ilp(fw, caps, rng))
    results.append(check_abstract_ilp(fw, caps, rng))
    results.append(check_glb_property(fw, caps, rng))
    results.extend(check_approximates_relation(fw, caps, rng))
    return results


def lub_approximants(fw: ApproximationFramework, xs: Sequence[Approximant]) -> Approximant | None:
    """lub in the approximation space; None when no upper bound exists."""
    return fw.lub_p(list(xs))
