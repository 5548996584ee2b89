"""Finite partially ordered sets and their order-theoretic primitives.

Elements are opaque string identifiers.  The order relation is stored
reflexively and transitively closed as per-element bitmasks, so every
operation below reduces to integer bit arithmetic.  Input may supply
either the full order or just a Hasse (cover) relation; the closure is
computed either way and antisymmetry is verified.

Everything is restricted to finite posets.  Two consequences are relied
on throughout and documented here once:

* every subset is closed (chains have their glb/lub inside the subset's
  closure trivially), so "closed set" never appears as an operation;
* chain-completeness degenerates to having a least element, because a
  finite chain always contains its own least upper bound and the empty
  chain needs a least element as its lub.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ElementNotFoundError,
    InputError,
    NotAPartialOrderError,
    SizeCapError,
)

DEFAULT_MAX_ELEMENTS = 4096
DEFAULT_ATOM_CAP = 16


@dataclass(frozen=True)
class PosetClassification:
    """Order-completeness flags of a finite poset.

    The flags form a chain of implications: complete lattice implies
    bounded-complete implies cpo implies least element; for finite
    posets cpo-hood and having a least element coincide.
    """

    has_least: bool
    is_cpo: bool
    is_bounded_complete: bool
    is_complete_lattice: bool


class FinitePoset:
    """An explicit finite poset over string identifiers."""

    __slots__ = ("elements", "_index", "_up", "_down", "_full")

    def __init__(
        self,
        elements: Iterable[str],
        pairs: Iterable[tuple[str, str]] = (),
        *,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
    ):
        """Build a poset from `pairs`, read as x <= y.

        `pairs` may be any generating relation (for example a Hasse
        diagram); the reflexive-transitive closure is taken.  A cycle
        through distinct elements raises NotAPartialOrderError.
        """
        elems = tuple(elements)
        if len(set(elems)) != len(elems):
            raise InputError("duplicate element identifiers")
        if len(elems) > max_elements:
            raise SizeCapError(
                f"poset has {len(elems)} elements, cap is {max_elements}"
            )
        index = {x: i for i, x in enumerate(elems)}
        n = len(elems)
        up = [1 << i for i in range(n)]
        for x, y in pairs:
            if x not in index:
                raise ElementNotFoundError(f"unknown element {x!r}")
            if y not in index:
                raise ElementNotFoundError(f"unknown element {y!r}")
            up[index[x]] |= 1 << index[y]
        # Warshall closure over the up-sets.
        for k in range(n):
            upk = up[k]
            bit = 1 << k
            for i in range(n):
                if up[i] & bit:
                    up[i] |= upk
        for i in range(n):
            for j in _bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise NotAPartialOrderError(
                        f"cycle through {elems[i]!r} and {elems[j]!r}"
                    )
        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        self.elements = elems
        self._index = index
        self._up = up
        self._down = down
        self._full = (1 << n) - 1

    @classmethod
    def _from_masks(cls, elements: tuple[str, ...], up: list[int]) -> "FinitePoset":
        """Internal fast path: masks already reflexive-transitively closed."""
        p = cls.__new__(cls)
        n = len(elements)
        index = {x: i for i, x in enumerate(elements)}
        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        p.elements = elements
        p._index = index
        p._up = up
        p._down = down
        p._full = (1 << n) - 1
        return p

    @classmethod
    def from_json(cls, data, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> "FinitePoset":
        """Parse {"elements": [...], "hasse": [[x, y], ...]}.

        The pairs mean "x is covered by y"; any generating relation is
        accepted, the closure is computed.
        """
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict) or "elements" not in data:
            raise InputError('poset JSON needs an "elements" list')
        elements = data["elements"]
        pairs = data.get("hasse", data.get("leq", []))
        if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
            raise InputError('"elements" must be a list of strings')
        if not isinstance(pairs, list) or not all(
            isinstance(p, (list, tuple)) and len(p) == 2 for p in pairs
        ):
            raise InputError('"hasse" must be a list of [x, y] pairs')
        return cls(elements, [tuple(p) for p in pairs], max_elements=max_elements)

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "hasse": [list(p) for p in self.cover_pairs()]}

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ElementNotFoundError(f"unknown element {x!r}") from None

    def leq(self, x: str, y: str) -> bool:
        return bool(self._up[self.index(x)] >> self.index(y) & 1)

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    def mask_of(self, s: Iterable[str]) -> int:
        m = 0
        for x in s:
            m |= 1 << self.index(x)
        return m

    def set_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.elements[i] for i in _bits(mask))

    def up_mask(self, x: str) -> int:
        return self._up[self.index(x)]

    def down_mask(self, x: str) -> int:
        return self._down[self.index(x)]

    # -- bounds ----------------------------------------------------------

    def lub(self, s: Iterable[str]) -> str | None:
        """Least upper bound of `s`, or None when it does not exist.

        lub of the empty set is the least element (when there is one).
        """
        i = self._lub_mask(self.mask_of(s))
        return None if i < 0 else self.elements[i]

    def glb(self, s: Iterable[str]) -> str | None:
        i = self._glb_mask(self.mask_of(s))
        return None if i < 0 else self.elements[i]

    def _lub_mask(self, smask: int) -> int:
        ubs = self._full
        for i in _bits(smask):
            ubs &= self._up[i]
        for i in _bits(ubs):
            if ubs & ~self._up[i] == 0:
                return i
        return -1

    def _glb_mask(self, smask: int) -> int:
        lbs = self._full
        for i in _bits(smask):
            lbs &= self._down[i]
        for i in _bits(lbs):
            if lbs & ~self._down[i] == 0:
                return i
        return -1

    def least(self) -> str | None:
        return self.lub(())

    def greatest(self) -> str | None:
        return self.glb(())

    # -- subset shape ----------------------------------------------------

    def min_set(self, s: Iterable[str]) -> frozenset[str]:
        smask = self.mask_of(s)
        return self.set_of(self._min_mask(smask))

    def max_set(self, s: Iterable[str]) -> frozenset[str]:
        smask = self.mask_of(s)
        return self.set_of(self._max_mask(smask))

    def _min_mask(self, smask: int) -> int:
        out = 0
        for i in _bits(smask):
            if self._down[i] & smask == 1 << i:
                out |= 1 << i
        return out

    def _max_mask(self, smask: int) -> int:
        out = 0
        for i in _bits(smask):
            if self._up[i] & smask == 1 << i:
                out |= 1 << i
        return out

    def is_chain(self, s: Iterable[str]) -> bool:
        idx = [self.index(x) for x in s]
        for a, b in itertools.combinations(idx, 2):
            if not (self._up[a] >> b & 1 or self._up[b] >> a & 1):
                return False
        return True

    def is_antichain(self, s: Iterable[str]) -> bool:
        idx = [self.index(x) for x in s]
        for a, b in itertools.combinations(idx, 2):
            if self._up[a] >> b & 1 or self._up[b] >> a & 1:
                return False
        return True

    def is_convex(self, s: Iterable[str]) -> bool:
        smask = self.mask_of(s)
        for a in _bits(smask):
            for b in _bits(smask & self._up[a]):
                if (self._up[a] & self._down[b]) & ~smask:
                    return False
        return True

    def lower_closure(self, s: Iterable[str]) -> frozenset[str]:
        m = 0
        for x in s:
            m |= self._down[self.index(x)]
        return self.set_of(m)

    def upper_closure(self, s: Iterable[str]) -> frozenset[str]:
        m = 0
        for x in s:
            m |= self._up[self.index(x)]
        return self.set_of(m)

    def interval(self, x: str, y: str) -> frozenset[str]:
        """All elements z with x <= z <= y."""
        return self.set_of(self.up_mask(x) & self.down_mask(y))

    # -- classification --------------------------------------------------

    def classify(self) -> PosetClassification:
        """Completeness flags, computed with the finite shortcuts.

        Bounded-completeness is decided on pairs: in a finite poset,
        glbs of pairs extend to glbs of all non-empty subsets by
        folding.  Agreement with brute-force subset enumeration is part
        of the test suite.
        """
        n = len(self.elements)
        if n == 0:
            return PosetClassification(False, False, False, False)
        has_least = self.least() is not None
        bounded = has_least and all(
            self._glb_mask((1 << a) | (1 << b)) >= 0
            for a, b in itertools.combinations(range(n), 2)
        )
        complete = bounded and self.greatest() is not None
        return PosetClassification(
            has_least=has_least,
            is_cpo=has_least,
            is_bounded_complete=bounded,
            is_complete_lattice=complete,
        )

    # -- misc ------------------------------------------------------------

    def cover_pairs(self) -> list[tuple[str, str]]:
        """The Hasse diagram of the stored order."""
        out = []
        for i, x in enumerate(self.elements):
            strict = self._up[i] & ~(1 << i)
            for j in _bits(strict):
                between = self._up[i] & self._down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    out.append((x, self.elements[j]))
        return out

    def longest_chain_length(self) -> int:
        """Number of elements on a longest chain."""
        n = len(self.elements)
        order = sorted(range(n), key=lambda i: bin(self._down[i]).count("1"))
        height = [1] * n
        for i in order:
            below = self._down[i] & ~(1 << i)
            for j in _bits(below):
                height[i] = max(height[i], height[j] + 1)
        return max(height, default=0)

    def __repr__(self) -> str:
        return f"FinitePoset({len(self.elements)} elements)"


def _bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_id(members: Iterable[str]) -> str:
    """Canonical identifier for a set of identifiers: "{a,b}" sorted."""
    return "{" + ",".join(sorted(members)) + "}"


def tuple_id(parts: Sequence[str]) -> str:
    """Canonical identifier for a tuple of identifiers."""
    return "(" + "|".join(parts) + ")"


def powerset_lattice(
    atoms: Iterable[str],
    order: str = "subset",
    *,
    atom_cap: int = DEFAULT_ATOM_CAP,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> FinitePoset:
    """The lattice of all subsets of `atoms` under subset or superset order.

    Element identifiers are canonical "{a,b}" strings.  Under "superset"
    the order is reversed, so the least element is the full set; this is
    the belief-state order, where smaller sets carry more knowledge.
    """
    atom_list = sorted(set(atoms))
    if order not in ("subset", "superset"):
        raise InputError(f"unknown order {order!r}")
    if len(atom_list) > atom_cap:
        raise SizeCapError(f"{len(atom_list)} atoms exceed the cap of {atom_cap}")
    if 1 << len(atom_list) > max_elements:
        raise SizeCapError(
            f"powerset would have {1 << len(atom_list)} elements, cap is {max_elements}"
        )
    n = len(atom_list)
    subsets = []
    for bits in range(1 << n):
        subsets.append(set_id(atom_list[i] for i in range(n) if bits >> i & 1))
    up = [0] * (1 << n)
    for bits in range(1 << n):
        rest = (~bits) & ((1 << n) - 1)
        mask = 0
        sup = rest
        # iterate supersets of `bits`: bits | (any subset of rest)
        while True:
            mask |= 1 << (bits | sup)
            if sup == 0:
                break
            sup = (sup - 1) & rest
        up[bits] = mask
    if order == "superset":
        down = [0] * (1 << n)
        for i in range(1 << n):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        up = down
    return FinitePoset._from_masks(tuple(subsets), up)


def product_poset(
    factors: Sequence[FinitePoset],
    *,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> FinitePoset:
    """Pointwise-ordered product; identifiers encode component tuples."""
    if not factors:
        raise InputError("product of zero posets")
    total = 1
    for f in factors:
        total *= len(f)
    if total > max_elements:
        raise SizeCapError(f"product would have {total} elements, cap is {max_elements}")
    combos = list(itertools.product(*(f.elements for f in factors)))
    ids = tuple(tuple_id(c) for c in combos)
    up = [0] * total
    for i, ci in enumerate(combos):
        for j, cj in enumerate(combos):
            if all(f.leq(a, b) for f, a, b in zip(factors, ci, cj)):
                up[i] |= 1 << j
    return FinitePoset._from_masks(ids, up)


def product_components(ident: str) -> tuple[str, ...]:
    """Invert tuple_id for identifiers produced by product_poset."""
    if not (ident.startswith("(") and ident.endswith(")")):
        raise InputError(f"not a product identifier: {ident!r}")
    return tuple(ident[1:-1].split("|"))
