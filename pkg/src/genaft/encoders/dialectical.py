"""Weighted abstract dialectical frameworks over an acceptance-value poset.

Each argument carries an acceptance condition over its parents' values,
built from constants, parent references, glb/lub combinations, and
explicit tables.  An interpretation assigns every argument a value; the
exact space is the pointwise-ordered product of the value poset, one
factor per argument, which is bounded-complete whenever the value poset
is: no greatest element is required, and that is the point, because
acceptance orders routinely have several maximal values.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Mapping

from ..engine import ExactOperator
from ..errors import EvaluationError, InputError, PreconditionError
from ..posets import (
    DEFAULT_MAX_ELEMENTS,
    FinitePoset,
    product_components,
    product_poset,
    tuple_id,
)


def parse_acceptance(node, values: set[str], arguments: set[str]) -> tuple:
    """JSON list form to an immutable tree.

    Nodes: ["const", v] | ["parent", arg] | ["glb", e...] | ["lub", e...]
    | ["table", [parents...], [[[v...], out], ...]].
    """
    if not isinstance(node, (list, tuple)) or not node:
        raise InputError(f"malformed acceptance node: {node!r}")
    op, *args = node
    if op == "const":
        if len(args) != 1 or args[0] not in values:
            raise InputError(f"bad constant node: {node!r}")
        return ("const", args[0])
    if op == "parent":
        if len(args) != 1 or args[0] not in arguments:
            raise InputError(f"bad parent node: {node!r}")
        return ("parent", args[0])
    if op in ("glb", "lub"):
        if not args:
            raise InputError(f"{op} needs at least one argument")
        return (op, tuple(parse_acceptance(a, values, arguments) for a in args))
    if op == "table":
        if len(args) != 2:
            raise InputError(f"bad table node: {node!r}")
        parents, rows = args
        if not all(p in arguments for p in parents):
            raise InputError(f"table over undeclared arguments: {parents!r}")
        mapping = {}
        for row in rows:
            key, out = tuple(row[0]), row[1]
            if len(key) != len(parents) or out not in values or not all(
                v in values for v in key
            ):
                raise InputError(f"bad table row: {row!r}")
            mapping[key] = out
        missing = [
            combo
            for combo in itertools.product(sorted(values), repeat=len(parents))
            if combo not in mapping
        ]
        if missing:
            raise InputError(
                f"table over {list(parents)} is missing {len(missing)} rows, e.g. {missing[0]}"
            )
        return ("table", tuple(parents), mapping)
    raise InputError(f"unknown acceptance node {op!r}")


def _parents_of(expr: tuple) -> set[str]:
    op = expr[0]
    if op == "const":
        return set()
    if op == "parent":
        return {expr[1]}
    if op == "table":
        return set(expr[1])
    out: set[str] = set()
    for sub in expr[1]:
        out |= _parents_of(sub)
    return out


def uses_only_glb(expr: tuple) -> bool:
    """True when the expression is built from glb/parent/const alone,
    which makes the induced operator monotone."""
    op = expr[0]
    if op in ("const", "parent"):
        return True
    if op == "glb":
        return all(uses_only_glb(sub) for sub in expr[1])
    return False


@dataclass(frozen=True)
class Wadf:
    arguments: tuple[str, ...]
    value_poset: FinitePoset
    acceptance: Mapping[str, tuple]

    def __post_init__(self):
        if len(set(self.arguments)) != len(self.arguments):
            raise InputError("duplicate arguments")
        missing = [a for a in self.arguments if a not in self.acceptance]
        if missing:
            raise InputError(f"arguments without acceptance conditions: {missing}")

    @classmethod
    def from_json(cls, data) -> "Wadf":
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid JSON: {exc}") from exc
        try:
            arguments = tuple(data["arguments"])
            values = FinitePoset.from_json(data["values"])
            raw = data["acceptance"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed wADF JSON: {exc}") from exc
        vset, aset = set(values.elements), set(arguments)
        acceptance = {a: parse_acceptance(raw[a], vset, aset) for a in arguments}
        return cls(arguments, values, acceptance)


def wadf_exact_space(
    w: Wadf, *, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> FinitePoset:
    """Pointwise product of the value poset, one factor per argument."""
    return product_poset([w.value_poset] * len(w.arguments), max_elements=max_elements)


def wadf_operator(
    w: Wadf, *, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> ExactOperator:
    """One revision step: every argument re-evaluates its acceptance
    condition under the current assignment."""
    cls = w.value_poset.classify()
    if not cls.is_bounded_complete:
        raise PreconditionError("the acceptance-value poset must be a bounded-complete cpo")
    domain = wadf_exact_space(w, max_elements=max_elements)
    arg_index = {a: i for i, a in enumerate(w.arguments)}

    def evaluate(arg: str, expr: tuple, assignment: tuple[str, ...]) -> str:
        op = expr[0]
        if op == "const":
            return expr[1]
        if op == "parent":
            return assignment[arg_index[expr[1]]]
        if op == "table":
            key = tuple(assignment[arg_index[p]] for p in expr[1])
            return expr[2][key]
        values = [evaluate(arg, sub, assignment) for sub in expr[1]]
        if op == "glb":
            return w.value_poset.glb(values)
        out = w.value_poset.lub(values)
        if out is None:
            raise EvaluationError(
                f"acceptance of {arg!r} asks for a lub of {sorted(set(values))},"
                " which does not exist in the value poset"
            )
        return out

    table = {}
    for ident in domain.elements:
        assignment = product_components(ident)
        revised = tuple(
            evaluate(a, w.acceptance[a], assignment) for a in w.arguments
        )
        table[ident] = tuple_id(revised)
    return ExactOperator(domain, table)


def assignment_id(w: Wadf, assignment: Mapping[str, str]) -> str:
    return tuple_id([assignment[a] for a in w.arguments])


def assignment_of(w: Wadf, ident: str) -> dict[str, str]:
    return dict(zip(w.arguments, product_components(ident)))
