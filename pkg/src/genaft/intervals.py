"""The consistent-pairs approximation framework over a complete lattice.

Both decomposition spaces are the exact lattice itself, the combined
order is the exact order, and an approximant is a pair (low, high) with
low <= high standing for every element in between.  This is the classic
interval construction; it exists only over complete lattices, which is
exactly the restriction the flower framework lifts.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Sequence

from .errors import PreconditionError, RecomposeUndefinedError
from .framework import Approximant, ApproximationFramework
from .posets import FinitePoset


class IntervalFramework(ApproximationFramework):
    kind = "interval"

    def __init__(self, exact: FinitePoset):
        super().__init__(exact)
        self._bot = exact.least()
        self._top = exact.greatest()

    # -- combined order: one carrier, the exact order ----------------------

    def bound_leq(self, side1, b1, side2, b2) -> bool:
        return self.exact.leq(b1, b2)

    def same_bound(self, side1, b1, side2, b2) -> bool:
        return b1 == b2

    def lub_L(self, ls) -> str | None:
        return self.exact.lub(ls)

    def glb_U(self, us) -> str:
        g = self.exact.glb(us)
        if g is None:
            raise PreconditionError("exact space stopped being a complete lattice")
        return g

    def lub_U(self, us) -> str:
        j = self.exact.lub(us)
        if j is None:
            raise PreconditionError("exact space stopped being a complete lattice")
        return j

    def U_least(self) -> str:
        return self._bot

    def U_greatest(self) -> str:
        return self._top

    def least_aub_above(self, l) -> str:
        return l

    def enumerate_aubs(self) -> list | None:
        return list(self.exact.elements)

    def sample_aub(self, rng: random.Random) -> str:
        return rng.choice(self.exact.elements)

    # -- approximants -------------------------------------------------------

    def recompose(self, l, u) -> Approximant:
        if not self.exact.leq(l, u):
            raise RecomposeUndefinedError(f"inconsistent pair ({l!r}, {u!r})")
        return Approximant(self, l, u)

    def members_mask(self, x: Approximant) -> int:
        return self.exact.up_mask(x.alb) & self.exact.down_mask(x.aub)

    def exact_approximant(self, y: str) -> Approximant:
        self.exact.index(y)
        return Approximant(self, y, y)

    def lub_p(self, xs: Sequence[Approximant]) -> Approximant | None:
        if not xs:
            return self.least_approximant()
        low = self.exact.lub([x.alb for x in xs])
        high = self.exact.glb([x.aub for x in xs])
        if low is None or high is None or not self.exact.leq(low, high):
            return None
        return Approximant(self, low, high)

    def enumerate_approximants(self, cap: int | None = None) -> list[Approximant] | None:
        """All consistent pairs, built directly rather than through
        recompose so that checks exercise recompose independently."""
        from .framework import DEFAULT_CAPS

        cap = DEFAULT_CAPS.max_approximants if cap is None else cap
        out = []
        for l in self.exact.elements:
            for u in self.exact.set_of(self.exact.up_mask(l)):
                out.append(Approximant(self, l, u))
                if len(out) > cap:
                    return None
        return out

    def approximant_from_members(self, members: Iterable[str]) -> Approximant:
        ms = list(members)
        low, high = self.exact.glb(ms), self.exact.lub(ms)
        x = Approximant(self, low, high)
        if self.members(x) != frozenset(ms):
            raise PreconditionError(f"{sorted(ms)} is not an interval")
        return x

    def truth_leq(self, x: Approximant, y: Approximant) -> bool:
        """The truth order on pairs; exposed for completeness, unused by
        any algorithm here."""
        return self.exact.leq(x.alb, y.alb) and self.exact.leq(x.aub, y.aub)

    def format_approximant(self, x: Approximant) -> str:
        return f"[{x.alb}, {x.aub}]"

    def ultimate_map(self, table: Callable[[str], str]) -> Callable[[Approximant], Approximant]:
        """Most precise approximator: glb and lub of the image over the
        approximated interval."""

        def apply(x: Approximant) -> Approximant:
            image = {table(y) for y in self.members(x)}
            return Approximant(self, self.exact.glb(image), self.exact.lub(image))

        return apply


def build_interval_framework(exact: FinitePoset) -> IntervalFramework:
    """Intervals over `exact`; requires a complete lattice.

    The error message names what is missing, since rejecting a merely
    bounded-complete space (no greatest element) is the expected failure
    mode that motivates flowers.
    """
    cls = exact.classify()
    if not cls.is_complete_lattice:
        if not cls.has_least:
            missing = "a least element"
        elif not cls.is_bounded_complete:
            missing = _name_missing_glb(exact)
        else:
            missing = "a greatest element"
        raise PreconditionError(
            f"interval framework needs a complete lattice; the exact space lacks {missing}"
        )
    return IntervalFramework(exact)


def _name_missing_glb(exact: FinitePoset) -> str:
    import itertools

    for a, b in itertools.combinations(exact.elements, 2):
        if exact.glb([a, b]) is None:
            return f"a greatest lower bound for {{{a},{b}}}"
    return "a greatest lower bound for some subset"
