"""Auto-epistemic theories as exact operators on belief states.

A belief state is the set of interpretations an introspective agent
deems possible; states are ordered by the superset order, so the least
state (no knowledge) contains every interpretation and the greatest
(inconsistent) state is empty.  The operator of a theory maps a belief
state to the interpretations satisfying every sentence once each
modal atom K(phi) is replaced by its truth value in the current state:
K(phi) holds iff phi holds in every deemed-possible interpretation.

The scope is deliberately modest: propositional sentences whose modal
atoms wrap objective formulas only (no nested K).  That is all the
belief-state semantics needs here, and nesting would drag in a full
possible-world construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from ..engine import ExactOperator
from ..errors import InputError, SizeCapError
from ..posets import (
    DEFAULT_MAX_ELEMENTS,
    FinitePoset,
    powerset_lattice,
    set_id,
)

MAX_AEL_ATOMS = 4

_NODE_ARITY = {"atom": 1, "not": 1, "K": 1, "iff": 2}
_NARY = {"and", "or"}


def parse_formula(node) -> tuple:
    """JSON list form to an immutable tree: ["iff", ["atom","q"], ...]."""
    if not isinstance(node, (list, tuple)) or not node:
        raise InputError(f"malformed formula node: {node!r}")
    op, *args = node
    if op == "atom":
        if len(args) != 1 or not isinstance(args[0], str):
            raise InputError(f"malformed atom node: {node!r}")
        return ("atom", args[0])
    if op in _NARY:
        if not args:
            raise InputError(f"{op} needs at least one argument")
        return (op, tuple(parse_formula(a) for a in args))
    if op in _NODE_ARITY and op != "atom":
        if len(args) != _NODE_ARITY[op]:
            raise InputError(f"{op} expects {_NODE_ARITY[op]} arguments")
        return (op, *(parse_formula(a) for a in args))
    raise InputError(f"unknown formula node {op!r}")


def _scan(f: tuple, *, inside_k: bool, atoms: set[str], modal_out: list):
    op = f[0]
    if op == "atom":
        if f[1] not in atoms:
            raise InputError(f"undeclared atom {f[1]!r}")
        return
    if op == "K":
        if inside_k:
            raise InputError("nested K is not supported")
        modal_out.append(f[1])
        _scan(f[1], inside_k=True, atoms=atoms, modal_out=modal_out)
        return
    if op in _NARY:
        for g in f[1]:
            _scan(g, inside_k=inside_k, atoms=atoms, modal_out=modal_out)
        return
    for g in f[1:]:
        _scan(g, inside_k=inside_k, atoms=atoms, modal_out=modal_out)


@dataclass(frozen=True)
class AelTheory:
    atoms: tuple[str, ...]
    sentences: tuple[tuple, ...]

    def __post_init__(self):
        atom_set = set(self.atoms)
        if len(atom_set) != len(self.atoms):
            raise InputError("duplicate atoms")
        for s in self.sentences:
            _scan(s, inside_k=False, atoms=atom_set, modal_out=[])

    @classmethod
    def from_json(cls, data) -> "AelTheory":
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid JSON: {exc}") from exc
        try:
            atoms = tuple(sorted(data["atoms"]))
            sentences = tuple(parse_formula(s) for s in data["sentences"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed theory JSON: {exc}") from exc
        return cls(atoms, sentences)

    def modal_subformulas(self) -> list[tuple]:
        out: list = []
        for s in self.sentences:
            _scan(s, inside_k=False, atoms=set(self.atoms), modal_out=out)
        seen, unique = set(), []
        for g in out:
            if g not in seen:
                seen.add(g)
                unique.append(g)
        return unique


def eval_objective(f: tuple, imask: int, atom_index: dict[str, int]) -> bool:
    op = f[0]
    if op == "atom":
        return bool(imask >> atom_index[f[1]] & 1)
    if op == "not":
        return not eval_objective(f[1], imask, atom_index)
    if op == "and":
        return all(eval_objective(g, imask, atom_index) for g in f[1])
    if op == "or":
        return any(eval_objective(g, imask, atom_index) for g in f[1])
    if op == "iff":
        return eval_objective(f[1], imask, atom_index) == eval_objective(f[2], imask, atom_index)
    raise InputError(f"K inside an objective formula: {f!r}")


def _eval_modal(f: tuple, imask: int, atom_index: dict[str, int], kvalue: dict[tuple, bool]) -> bool:
    op = f[0]
    if op == "K":
        return kvalue[f[1]]
    if op == "atom":
        return bool(imask >> atom_index[f[1]] & 1)
    if op == "not":
        return not _eval_modal(f[1], imask, atom_index, kvalue)
    if op == "and":
        return all(_eval_modal(g, imask, atom_index, kvalue) for g in f[1])
    if op == "or":
        return any(_eval_modal(g, imask, atom_index, kvalue) for g in f[1])
    return _eval_modal(f[1], imask, atom_index, kvalue) == _eval_modal(
        f[2], imask, atom_index, kvalue
    )


def belief_state_space(
    theory: AelTheory, *, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> FinitePoset:
    """The lattice of belief states, ordered by superset."""
    interps = interpretation_ids(theory.atoms)
    return powerset_lattice(interps, "superset", max_elements=max_elements)


def interpretation_ids(atoms: tuple[str, ...]) -> list[str]:
    n = len(atoms)
    return [
        set_id(a for i, a in enumerate(atoms) if bits >> i & 1) for bits in range(1 << n)
    ]


def ael_operator(
    theory: AelTheory,
    *,
    max_atoms: int = MAX_AEL_ATOMS,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> ExactOperator:
    """The belief-state revision operator of the theory."""
    if len(theory.atoms) > max_atoms:
        raise SizeCapError(f"{len(theory.atoms)} atoms exceed the cap of {max_atoms}")
    atoms = theory.atoms
    atom_index = {a: i for i, a in enumerate(atoms)}
    n_interp = 1 << len(atoms)
    interp_ids = interpretation_ids(atoms)
    domain = belief_state_space(theory, max_elements=max_elements)

    modal = theory.modal_subformulas()
    modal_masks = []
    for g in modal:
        gmask = 0
        for imask in range(n_interp):
            if eval_objective(g, imask, atom_index):
                gmask |= 1 << imask
        modal_masks.append((g, gmask))

    admitted_cache: dict[tuple[bool, ...], int] = {}

    def admitted(kvals: tuple[bool, ...]) -> int:
        hit = admitted_cache.get(kvals)
        if hit is not None:
            return hit
        kvalue = {g: v for (g, _), v in zip(modal_masks, kvals)}
        out = 0
        for imask in range(n_interp):
            if all(_eval_modal(s, imask, atom_index, kvalue) for s in theory.sentences):
                out |= 1 << imask
        admitted_cache[kvals] = out
        return out

    table = {}
    for state in range(1 << n_interp):
        # K(g) holds iff every deemed-possible interpretation satisfies g;
        # the empty (inconsistent) state knows everything vacuously.
        kvals = tuple(state & ~gmask == 0 for _, gmask in modal_masks)
        members = admitted(kvals)
        table[_state_id(state, interp_ids)] = _state_id(members, interp_ids)
    return ExactOperator(domain, table)


def _state_id(state_mask: int, interp_ids: list[str]) -> str:
    return set_id(interp_ids[i] for i in range(len(interp_ids)) if state_mask >> i & 1)


def belief_state_id(theory: AelTheory, interps: Iterable[frozenset[str]]) -> str:
    """Identifier of the belief state holding exactly these interpretations."""
    return set_id(set_id(i) for i in interps)
