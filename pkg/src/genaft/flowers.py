"""The flower approximation framework over a bounded-complete cpo.

A flower is a non-empty convex subset containing its own greatest lower
bound: a union of intervals sharing one foot.  Flowers decompose into
an ALB (the glb) and an AUB that is an antichain of maximal elements,
which is what lets them keep several incomparable upper bounds where an
interval would have to blur them into one.

The lower decomposition space is the exact poset itself; the upper one
is the set of non-empty antichains, ordered by inclusion of their lower
closures, with a side condition forbidding antichains below single
elements.  Antichains are kept as identifier-sorted tuples so equality
and printing are canonical.  The upper space is in bijection with the
non-empty down-closed subsets (an antichain is the max-set of its lower
closure), which realises its complete-lattice structure through plain
set algebra on bitmasks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import PreconditionError, RecomposeUndefinedError
from .framework import Approximant, ApproximationFramework, Caps, CheckResult, DEFAULT_CAPS
from . import framework as _fx
from .posets import FinitePoset

FLOWER_ENUMERATION_LIMIT = 12


@dataclass(frozen=True)
class Flower:
    """A validated flower given by its member set."""

    poset: FinitePoset = field(repr=False)
    members: frozenset[str]

    def __post_init__(self):
        if not self.members:
            raise PreconditionError("a flower is non-empty")
        g = self.poset.glb(self.members)
        if g is None or g not in self.members:
            raise PreconditionError(
                f"{sorted(self.members)} does not contain its greatest lower bound"
            )
        if not self.poset.is_convex(self.members):
            raise PreconditionError(f"{sorted(self.members)} is not convex")

    @property
    def alb(self) -> str:
        return self.poset.glb(self.members)

    @property
    def aub(self) -> tuple[str, ...]:
        return tuple(sorted(self.poset.max_set(self.members)))

    def __str__(self) -> str:
        return "⟨" + str(self.alb) + " | {" + ",".join(self.aub) + "}⟩"


def flower_closure(exact: FinitePoset, s: Iterable[str]) -> Flower:
    """The least flower containing `s`.

    Existence relies on bounded-completeness: the members are everything
    between glb(s) and some maximal element of s.
    """
    ms = list(s)
    if not ms:
        raise PreconditionError("flower closure of the empty set")
    g = exact.glb(ms)
    if g is None:
        raise PreconditionError(f"{sorted(ms)} has no greatest lower bound")
    mask = 0
    for m in exact.max_set(ms):
        mask |= exact.down_mask(m)
    mask &= exact.up_mask(g)
    return Flower(exact, exact.set_of(mask))


class FlowerFramework(ApproximationFramework):
    kind = "flower"

    def __init__(self, exact: FinitePoset, *, enumerable: bool):
        super().__init__(exact)
        self._bot = exact.least()
        self._enumerable = enumerable
        self._down_cache: dict[tuple[str, ...], int] = {}
        self._top_aub = tuple(sorted(exact.max_set(exact.elements)))
        self._all_approximants: list[Approximant] | None = None
        self._all_aubs: list[tuple[str, ...]] | None = None

    # -- antichain plumbing -------------------------------------------------

    def aub_mask(self, u: tuple[str, ...]) -> int:
        """Lower closure of the antichain, as a bitmask."""
        cached = self._down_cache.get(u)
        if cached is None:
            cached = 0
            for m in u:
                cached |= self.exact.down_mask(m)
            self._down_cache[u] = cached
        return cached

    def aub_of_mask(self, mask: int) -> tuple[str, ...]:
        return tuple(sorted(self.exact.set_of(self.exact._max_mask(mask))))

    # -- combined order -----------------------------------------------------

    def bound_leq(self, side1, b1, side2, b2) -> bool:
        if side1 == "L":
            if side2 == "L":
                return self.exact.leq(b1, b2)
            return bool(self.aub_mask(b2) >> self.exact.index(b1) & 1)
        if side2 == "U":
            return self.aub_mask(b1) & ~self.aub_mask(b2) == 0
        return False  # an AUB is never below an ALB: the side condition

    def same_bound(self, side1, b1, side2, b2) -> bool:
        return side1 == side2 and b1 == b2

    def lub_L(self, ls) -> str | None:
        return self.exact.lub(ls)

    def glb_U(self, us) -> tuple[str, ...]:
        mask = self.exact._full
        for u in us:
            mask &= self.aub_mask(u)
        if mask == 0:
            return self.aub_of_mask(self.exact._full)  # glb of nothing: the top
        return self.aub_of_mask(mask)

    def lub_U(self, us) -> tuple[str, ...]:
        mask = 0
        for u in us:
            mask |= self.aub_mask(u)
        if mask == 0:
            return self.U_least()
        return self.aub_of_mask(mask)

    def U_least(self) -> tuple[str, ...]:
        return (self._bot,)

    def U_greatest(self) -> tuple[str, ...]:
        return self._top_aub

    def least_aub_above(self, l) -> tuple[str, ...]:
        # The least down-set containing the principal one below l.
        return (l,)

    def enumerate_aubs(self) -> list[tuple[str, ...]] | None:
        if not self._enumerable:
            return None
        if self._all_aubs is None:
            n = len(self.exact)
            out = []
            for bits in range(1, 1 << n):
                subset = self.exact.set_of(bits)
                if self.exact.is_antichain(subset):
                    out.append(tuple(sorted(subset)))
            self._all_aubs = out
        return list(self._all_aubs)

    def sample_aub(self, rng: random.Random) -> tuple[str, ...]:
        k = rng.randint(1, max(1, len(self.exact) // 2))
        picked = rng.sample(self.exact.elements, min(k, len(self.exact)))
        return tuple(sorted(self.exact.max_set(picked)))

    # -- approximants ---------------------------------------------------------

    def recompose(self, l, u) -> Approximant:
        u = tuple(u)
        if not self.cross_leq(l, u):
            raise RecomposeUndefinedError(f"{l!r} is incompatible with the AUB {u!r}")
        mask = self.exact.up_mask(l) & self.aub_mask(u)
        # The glb of the recomposition is l itself; only the AUB may shrink.
        return Approximant(self, l, self.aub_of_mask(mask))

    def members_mask(self, x: Approximant) -> int:
        return self.exact.up_mask(x.alb) & self.aub_mask(x.aub)

    def exact_approximant(self, y: str) -> Approximant:
        self.exact.index(y)
        return Approximant(self, y, (y,))

    def lub_p(self, xs: Sequence[Approximant]) -> Approximant | None:
        if not xs:
            return self.least_approximant()
        mask = self.exact._full
        for x in xs:
            mask &= self.members_mask(x)
        if mask == 0:
            return None
        return self._from_mask(mask)

    def _from_mask(self, mask: int) -> Approximant:
        mins = self.exact._min_mask(mask)
        alb = self.exact.elements[mins.bit_length() - 1]
        return Approximant(self, alb, self.aub_of_mask(mask))

    def approximant_from_members(self, members: Iterable[str]) -> Approximant:
        f = Flower(self.exact, frozenset(members))
        return Approximant(self, f.alb, f.aub)

    def enumerate_approximants(self, cap: int | None = None) -> list[Approximant] | None:
        """All flowers, found by subset filtering rather than through
        recompose so that checks exercise recompose independently."""
        from .framework import DEFAULT_CAPS

        cap = DEFAULT_CAPS.max_approximants if cap is None else cap
        if not self._enumerable:
            return None
        if self._all_approximants is None:
            self._all_approximants = [
                Approximant(self, f.alb, f.aub) for f in enumerate_flowers(self.exact)
            ]
        if len(self._all_approximants) > cap:
            return None
        return list(self._all_approximants)

    def flower_of(self, x: Approximant) -> Flower:
        return Flower(self.exact, self.members(x))

    def format_approximant(self, x: Approximant) -> str:
        return "⟨" + str(x.alb) + " | {" + ",".join(x.aub) + "}⟩"

    def ultimate_map(self, table: Callable[[str], str]) -> Callable[[Approximant], Approximant]:
        """Most precise approximator: the flower closure of the image.

        The closure is the precision-greatest flower approximating every
        image point, so no information beyond the image set is lost.
        """

        def apply(x: Approximant) -> Approximant:
            image = {table(y) for y in self.members(x)}
            g = self.exact.glb(image)
            return Approximant(self, g, tuple(sorted(self.exact.max_set(image))))

        return apply


def build_flower_framework(
    exact: FinitePoset,
    enumerate_space: bool | None = None,
) -> FlowerFramework:
    """Flowers over `exact`; requires a bounded-complete cpo.

    `enumerate_space` materialises the antichain space for exhaustive
    checks; by default it is enabled only for posets of at most
    FLOWER_ENUMERATION_LIMIT elements, larger spaces operate purely on
    (ALB, AUB) pairs.
    """
    cls = exact.classify()
    if not cls.is_bounded_complete:
        raise PreconditionError(
            f"flower framework needs a bounded-complete cpo; {_witness(exact, cls)}"
        )
    if enumerate_space is None:
        enumerate_space = len(exact) <= FLOWER_ENUMERATION_LIMIT
    return FlowerFramework(exact, enumerable=enumerate_space)


def _witness(exact: FinitePoset, cls) -> str:
    import itertools

    if not cls.has_least:
        return f"the subset {set_label(exact.elements)} has no greatest lower bound"
    for a, b in itertools.combinations(exact.elements, 2):
        if exact.glb([a, b]) is None:
            return f"the subset {set_label((a, b))} has no greatest lower bound"
    return "some subset has no greatest lower bound"


def set_label(xs) -> str:
    return "{" + ",".join(sorted(xs)) + "}"


def enumerate_flowers(exact: FinitePoset) -> list[Flower]:
    """All flowers, by filtering subsets; meant for small posets."""
    if len(exact) > 16:
        raise PreconditionError("flower enumeration is limited to 16 elements")
    out = []
    for bits in range(1, 1 << len(exact)):
        members = exact.set_of(bits)
        g = exact.glb(members)
        if g is None or g not in members:
            continue
        if exact.is_convex(members):
            out.append(Flower(exact, members))
    return out


def composition_leq(fw: FlowerFramework, b1, b2) -> bool:
    """The flower composition order on mixed bounds.

    Strings are ALBs, iterables of strings are AUB antichains; the side
    condition rejects comparisons from an antichain down to an element.
    """
    side1, v1 = _as_bound(b1)
    side2, v2 = _as_bound(b2)
    return fw.bound_leq(side1, v1, side2, v2)


def _as_bound(b):
    if isinstance(b, str):
        return "L", b
    if isinstance(b, Flower):
        return "U", b.aub
    return "U", tuple(sorted(b))


def verify_flower_propositions(
    exact: FinitePoset,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> list[CheckResult]:
    """The four structural properties of the flower decomposition spaces.

    These are the flower instances of the chain/weak/abstract interlattice
    lub properties and of the interlattice glb property; counterexamples
    are reported, nothing raises.
    """
    rng = rng or random.Random(0)
    fw = build_flower_framework(exact)
    return [
        _fx.check_chain_ilp(fw, caps, rng),
        _fx.check_weak_ilp(fw, caps, rng),
        _fx.check_abstract_ilp(fw, caps, rng),
        _fx.check_glb_property(fw, caps, rng),
    ]
