"""Approximators and their fixpoint semantics.

Given a (typically non-monotone) exact operator and an approximation
framework, this module derives the ultimate approximator, runs stable
revision, and computes the four semantics: the Kripke-Kleene fixpoint
(least fixpoint of the approximator), the well-founded fixpoint (least
fixpoint of stable revision), and the supported and stable fixpoints
(exact elements fixed by the approximator / by stable revision).

Stable revision pairs two inner inductions.  The lower one runs in L
from the bottom, over bounds compatible with the input's AUB.  The
upper one runs in U, starting from the least AUB compatible with the
input's ALB: the framework's interlattice glb property guarantees that
this least compatible AUB exists, and starting any higher would skip
information while starting at the bottom of U would not even recompose.

Every induction is guarded: a non-increasing step or an incompatible
recomposition raises instead of silently looping, which is how a
non-monotone "approximator" or a non-reliable input announces itself.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import (
    InvalidRefinementError,
    MonotonicityError,
    PreconditionError,
    ReliabilityError,
)
from .fixpoints import MonotoneOperator, lfp
from .framework import Approximant, ApproximationFramework, Caps, DEFAULT_CAPS
from .posets import FinitePoset, _bits


@dataclass
class ExactOperator:
    """A total map on the exact poset; no monotonicity assumed."""

    domain: FinitePoset
    mapping: Callable[[str], str] | dict

    def apply(self, x: str) -> str:
        if isinstance(self.mapping, dict):
            return self.mapping[x]
        return self.mapping(x)

    def __call__(self, x: str) -> str:
        return self.apply(x)

    def table(self) -> dict[str, str]:
        return {x: self.apply(x) for x in self.domain.elements}

    def monotonicity_violation(self) -> tuple[str, str] | None:
        for x in self.domain.elements:
            fx = self.apply(x)
            for y in self.domain.elements:
                if self.domain.leq(x, y) and not self.domain.leq(fx, self.apply(y)):
                    return (x, y)
        return None

    def is_monotone(self) -> bool:
        return self.monotonicity_violation() is None


@dataclass
class Approximator:
    """A precision-monotone self-map on approximants.

    Applications are memoised; frameworks and approximants are immutable
    so the cache is sound.
    """

    space: ApproximationFramework
    mapping: Callable[[Approximant], Approximant]
    name: str = "approximator"
    _cache: dict = field(default_factory=dict, repr=False)

    def apply(self, x: Approximant) -> Approximant:
        hit = self._cache.get(x)
        if hit is None:
            hit = self.mapping(x)
            self._cache[x] = hit
        return hit

    def __call__(self, x: Approximant) -> Approximant:
        return self.apply(x)


class _Domain:
    """Adapter giving the fixpoint engine a leq/least view of a space."""

    __slots__ = ("_leq", "_least")

    def __init__(self, leq, least):
        self._leq = leq
        self._least = least

    def leq(self, x, y):
        return self._leq(x, y)

    def least(self):
        return self._least


def ultimate_approximator(fw: ApproximationFramework, op: ExactOperator) -> Approximator:
    """The most precise approximator of `op` on `fw`."""
    if fw.exact.elements != op.domain.elements:
        raise PreconditionError("framework and operator live on different exact spaces")
    table = op.table()
    return Approximator(fw, fw.ultimate_map(lambda y: table[y]), name=f"ultimate({op.domain!r})")


def approximation_violation(
    a: Approximator,
    op: ExactOperator,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> tuple[Approximant, str] | None:
    """A pair (approximant, element) breaking "a approximates op", or None."""
    rng = rng or random.Random(0)
    fw = a.space
    pool = fw.enumerate_approximants(caps.max_approximants)
    if pool is None:
        pool = [fw.sample_approximant(rng) for _ in range(caps.samples)]
    for x in pool:
        image = fw.members_mask(a.apply(x))
        for i in _bits(fw.members_mask(x)):
            y = fw.exact.elements[i]
            if not image >> fw.exact.index(op.apply(y)) & 1:
                return (x, y)
    return None


def approximates_operator(
    a: Approximator,
    op: ExactOperator,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> bool:
    return approximation_violation(a, op, caps, rng) is None


# ---------------------------------------------------------------------------
# reliability, prudence, stable revision


def is_reliable(a: Approximator, x: Approximant) -> bool:
    return a.space.leq_p(x, a.apply(x))


def lower_stable_bound(a: Approximator, x: Approximant):
    """lfp of the ALB projection of `a` with the AUB pinned to x's."""
    fw = a.space
    op = MonotoneOperator(
        _Domain(fw.alb_leq, fw.L_least()),
        lambda l: a.apply(fw.recompose(l, x.aub)).alb,
    )
    return lfp(op, step_cap=_step_cap(fw))


def upper_stable_bound(a: Approximator, x: Approximant):
    """lfp of the AUB projection of `a` with the ALB pinned to x's."""
    fw = a.space
    op = MonotoneOperator(
        _Domain(fw.aub_leq, fw.least_aub_above(x.alb)),
        lambda u: a.apply(fw.recompose(x.alb, u)).aub,
    )
    return lfp(op, step_cap=_step_cap(fw))


def is_prudent(a: Approximator, x: Approximant) -> bool:
    return a.space.alb_leq(x.alb, lower_stable_bound(a, x))


def stable_revision(a: Approximator, x: Approximant) -> Approximant:
    """One application of the stable revision operator.

    Requires a reliable input; the two inner inductions then stay in
    compatible territory and their fixpoints recompose.
    """
    if not is_reliable(a, x):
        raise ReliabilityError(
            f"{a.space.format_approximant(x)} is not reliable for {a.name}"
        )
    low = lower_stable_bound(a, x)
    high = upper_stable_bound(a, x)
    return a.space.recompose(low, high)


def _step_cap(fw: ApproximationFramework) -> int:
    return 4 * len(fw.exact) + 16


# ---------------------------------------------------------------------------
# the four semantics


def kripke_kleene(a: Approximator, *, start: Approximant | None = None) -> Approximant:
    """Least fixpoint of the approximator, from the least approximant.

    `start` admits warm starts from any approximant known to lie below
    the fixpoint, e.g. one carried over from a less precise space.
    """
    fw = a.space
    op = MonotoneOperator(_Domain(fw.leq_p, fw.least_approximant()), a.apply)
    return lfp(op, start=start, step_cap=_step_cap(fw))


def well_founded(a: Approximator) -> Approximant:
    """Least fixpoint of stable revision, from the least approximant."""
    fw = a.space
    x = fw.least_approximant()
    for _ in range(_step_cap(fw)):
        nxt = stable_revision(a, x)
        if nxt == x:
            return x
        if not fw.leq_p(x, nxt):
            raise MonotonicityError(
                "stable revision decreased; the approximator is not precision-monotone"
            )
        x = nxt
    raise MonotonicityError("stable revision did not reach a fixpoint")


def supported_fixpoints(a: Approximator) -> list[str]:
    """Exact elements fixed by the approximator, sorted."""
    fw = a.space
    out = []
    for y in fw.exact.elements:
        e = fw.exact_approximant(y)
        if a.apply(e) == e:
            out.append(y)
    return sorted(out)


def stable_fixpoints(a: Approximator) -> list[str]:
    """Exact elements fixed by stable revision, sorted.

    An exact approximant is reliable only when it is already supported,
    so non-supported elements are stable-free by definition.
    """
    fw = a.space
    out = []
    for y in supported_fixpoints(a):
        e = fw.exact_approximant(y)
        if stable_revision(a, e) == e:
            out.append(y)
    return sorted(out)


@dataclass
class SemanticsResult:
    """The requested fixpoints of one approximator."""

    kk: Approximant | None = None
    wf: Approximant | None = None
    supported: list[str] | None = None
    stable: list[str] | None = None

    def to_json(self, fw: ApproximationFramework) -> dict:
        out: dict = {}
        if self.kk is not None:
            out["kk"] = fw.to_json(self.kk)
        if self.wf is not None:
            out["wf"] = fw.to_json(self.wf)
        if self.supported is not None:
            out["supported"] = self.supported
        if self.stable is not None:
            out["stable"] = self.stable
        return out

    def dumps(self, fw: ApproximationFramework) -> str:
        return json.dumps(self.to_json(fw), sort_keys=True, indent=2)


def compute_semantics(
    a: Approximator,
    parts: Iterable[str] = ("kk", "wf", "supported", "stable"),
) -> SemanticsResult:
    wanted = set(parts)
    unknown = wanted - {"kk", "wf", "supported", "stable"}
    if unknown:
        raise PreconditionError(f"unknown semantics {sorted(unknown)}")
    result = SemanticsResult()
    if "kk" in wanted:
        result.kk = kripke_kleene(a)
    if "wf" in wanted:
        result.wf = well_founded(a)
    if "supported" in wanted:
        result.supported = supported_fixpoints(a)
    if "stable" in wanted:
        result.stable = stable_fixpoints(a)
    return result


# ---------------------------------------------------------------------------
# refinements and well-founded inductions


def is_application_refinement(a: Approximator, x: Approximant, y: Approximant) -> bool:
    fw = a.space
    return fw.leq_p(x, y) and fw.leq_p(y, a.apply(x))


def is_grounding_refinement(a: Approximator, x: Approximant, y: Approximant) -> bool:
    """y arises from x by replacing the AUB and is reliable.

    The witnessing AUB is y's own: recomposing x's ALB with it must give
    back y, so no search over U is needed.
    """
    fw = a.space
    if y.alb != x.alb or not fw.aub_leq(y.aub, x.aub):
        return False
    if not fw.cross_leq(x.alb, y.aub) or fw.recompose(x.alb, y.aub) != y:
        return False
    return fw.leq_p(y, a.apply(y))


def application_refinements(a: Approximator, x: Approximant) -> list[Approximant]:
    """Strict application refinements: the full image and its two
    one-sided recompositions."""
    fw = a.space
    ax = a.apply(x)
    candidates = [ax]
    if fw.cross_leq(ax.alb, x.aub):
        candidates.append(fw.recompose(ax.alb, x.aub))
    if fw.cross_leq(x.alb, ax.aub):
        candidates.append(fw.recompose(x.alb, ax.aub))
    out = []
    for y in candidates:
        if y != x and y not in out and is_application_refinement(a, x, y):
            out.append(y)
    return out


def grounding_refinements(a: Approximator, x: Approximant) -> list[Approximant]:
    """Strict grounding refinements whose AUBs come from the upper
    stable induction at x; the final iterate is always reliable, the
    intermediate ones are filtered."""
    fw = a.space
    seen = []
    u = fw.least_aub_above(x.alb)
    for _ in range(_step_cap(fw)):
        seen.append(u)
        nxt = a.apply(fw.recompose(x.alb, u)).aub
        if nxt == u:
            break
        u = nxt
    out = []
    for u in seen:
        if not fw.cross_leq(x.alb, u):
            continue
        y = fw.recompose(x.alb, u)
        if y != x and y not in out and is_grounding_refinement(a, x, y) and fw.leq_p(x, y):
            out.append(y)
    return out


def is_terminal_wf(a: Approximator, x: Approximant) -> bool:
    """No strict refinement remains: x is fixed by the approximator and
    no upper-induction AUB candidate grounds it further."""
    if a.apply(x) != x:
        return False
    return not grounding_refinements(a, x)


def run_wf_induction(
    a: Approximator,
    strategy: Callable | None = None,
    *,
    start: Approximant | None = None,
    max_steps: int | None = None,
) -> list[Approximant]:
    """Drive a well-founded induction to its terminal limit.

    `strategy(step, x, applications, groundings)` picks the next
    approximant among the offered strict refinements; the default
    alternates application and grounding steps.  Every choice is
    re-validated, so a wayward strategy raises instead of corrupting
    the trace.  Starting from an already-terminal approximant yields a
    one-element trace.
    """
    fw = a.space
    x = fw.least_approximant() if start is None else start
    trace = [x]
    cap = max_steps if max_steps is not None else _step_cap(fw)
    for step in range(cap):
        apps = application_refinements(a, x)
        grounds = grounding_refinements(a, x)
        if not apps and not grounds:
            return trace
        if strategy is None:
            if step % 2 == 0:
                y = apps[0] if apps else grounds[0]
            else:
                y = grounds[0] if grounds else apps[0]
        else:
            y = strategy(step, x, apps, grounds)
        if not (is_application_refinement(a, x, y) or is_grounding_refinement(a, x, y)):
            raise InvalidRefinementError(
                f"strategy returned {fw.format_approximant(y)}, which refines nothing"
            )
        x = y
        trace.append(x)
    raise MonotonicityError(f"well-founded induction not terminal within {cap} steps")


def random_wf_strategy(rng: random.Random) -> Callable:
    """A seeded strategy choosing uniformly among the offered refinements."""

    def pick(step, x, apps, grounds):
        return rng.choice(apps + grounds)

    return pick
