"""Normal logic programs as exact operators, with independent oracles.

The exact space of a program is the powerset of its atoms under subset
order; the operator is the immediate-consequence map.  Next to it live
the four-valued consequence approximator on intervals and a brute-force
oracle (reduct enumeration plus the alternating fixpoint) that knows
nothing about frameworks: the oracle is the ground truth the framework
pipeline is tested against, so it must stay independent of it.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable

from ..engine import Approximator, ExactOperator
from ..errors import InputError, SizeCapError
from ..framework import Approximant
from ..intervals import IntervalFramework, build_interval_framework
from ..posets import FinitePoset, powerset_lattice, set_id

ATOM_RE = re.compile(r"[A-Za-z0-9_]+\Z")
DEFAULT_ATOM_CAP = 12


@dataclass(frozen=True)
class Rule:
    head: str
    pos: frozenset[str]
    neg: frozenset[str]

    def __str__(self) -> str:
        body = [*sorted(self.pos), *(f"not {a}" for a in sorted(self.neg))]
        return f"{self.head} :- {', '.join(body)}." if body else f"{self.head}."


@dataclass(frozen=True)
class NormalLogicProgram:
    atoms: tuple[str, ...]
    rules: tuple[Rule, ...]

    def __post_init__(self):
        known = set(self.atoms)
        if len(known) != len(self.atoms):
            raise InputError("duplicate atoms")
        for a in self.atoms:
            if not ATOM_RE.match(a):
                raise InputError(f"bad atom name {a!r}")
        for r in self.rules:
            for a in (r.head, *r.pos, *r.neg):
                if a not in known:
                    raise InputError(f"rule mentions undeclared atom {a!r}")

    @classmethod
    def from_json(cls, data) -> "NormalLogicProgram":
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid JSON: {exc}") from exc
        try:
            atoms = tuple(sorted(data["atoms"]))
            rules = tuple(
                Rule(r["head"], frozenset(r.get("pos", ())), frozenset(r.get("neg", ())))
                for r in data["rules"]
            )
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed program JSON: {exc}") from exc
        return cls(atoms, rules)

    def to_json(self) -> dict:
        return {
            "atoms": list(self.atoms),
            "rules": [
                {"head": r.head, "pos": sorted(r.pos), "neg": sorted(r.neg)}
                for r in self.rules
            ],
        }


def parse_program(source: Iterable[str] | str, atoms: Iterable[str] | None = None) -> NormalLogicProgram:
    """Tiny rule syntax for tests and docs: "p :- q, not r"."""
    if isinstance(source, str):
        source = [ln for ln in source.splitlines() if ln.strip()]
    rules = []
    seen: set[str] = set(atoms or ())
    for line in source:
        line = line.strip().rstrip(".")
        if ":-" in line:
            head, body = line.split(":-")
        else:
            head, body = line, ""
        pos, neg = set(), set()
        for lit in filter(None, (b.strip() for b in body.split(","))):
            if lit.startswith("not "):
                neg.add(lit[4:].strip())
            else:
                pos.add(lit)
        head = head.strip()
        rules.append(Rule(head, frozenset(pos), frozenset(neg)))
        seen |= {head, *pos, *neg}
    return NormalLogicProgram(tuple(sorted(seen)), tuple(rules))


class _Bits:
    """Bitmask codec between atom sets and powerset-lattice identifiers."""

    def __init__(self, atoms: tuple[str, ...]):
        self.atoms = atoms
        self.index = {a: i for i, a in enumerate(atoms)}

    def mask(self, s: Iterable[str]) -> int:
        m = 0
        for a in s:
            m |= 1 << self.index[a]
        return m

    def unmask(self, m: int) -> frozenset[str]:
        return frozenset(a for i, a in enumerate(self.atoms) if m >> i & 1)

    def ident(self, m: int) -> str:
        return set_id(self.unmask(m))


def _compiled(program: NormalLogicProgram):
    bits = _Bits(program.atoms)
    rules = [
        (1 << bits.index[r.head], bits.mask(r.pos), bits.mask(r.neg))
        for r in program.rules
    ]
    return bits, rules


def _consequence(rules, imask: int) -> int:
    out = 0
    for head, pos, neg in rules:
        if pos & ~imask == 0 and neg & imask == 0:
            out |= head
    return out


def lp_exact_space(
    program: NormalLogicProgram, *, atom_cap: int = DEFAULT_ATOM_CAP
) -> FinitePoset:
    if len(program.atoms) > atom_cap:
        raise SizeCapError(f"{len(program.atoms)} atoms exceed the cap of {atom_cap}")
    return powerset_lattice(program.atoms, "subset")


def lp_operator(
    program: NormalLogicProgram,
    space: FinitePoset | None = None,
    *,
    atom_cap: int = DEFAULT_ATOM_CAP,
) -> ExactOperator:
    """The immediate-consequence operator on the powerset of atoms.

    `space` lets program corpora over one atom set share the lattice.
    """
    domain = space if space is not None else lp_exact_space(program, atom_cap=atom_cap)
    bits, rules = _compiled(program)
    table = {}
    for imask in range(1 << len(program.atoms)):
        table[bits.ident(imask)] = bits.ident(_consequence(rules, imask))
    return ExactOperator(domain, table)


def fitting_approximator(
    program: NormalLogicProgram,
    fw: IntervalFramework | None = None,
    *,
    atom_cap: int = DEFAULT_ATOM_CAP,
) -> Approximator:
    """The four-valued immediate-consequence approximator on intervals.

    A head is derivable in the lower bound when some rule fires with its
    positive body inside the lower bound and its negative body missing
    from the upper bound; the upper bound is symmetric.  Less precise
    than the ultimate approximator, which makes the pair a good test of
    the approximator-precision transfer results.
    """
    if fw is None:
        fw = build_interval_framework(lp_exact_space(program, atom_cap=atom_cap))
    bits, rules = _compiled(program)

    def apply(x: Approximant) -> Approximant:
        low, high = bits.mask(_members(x.alb)), bits.mask(_members(x.aub))
        new_low = new_high = 0
        for head, pos, neg in rules:
            if pos & ~low == 0 and neg & high == 0:
                new_low |= head
            if pos & ~high == 0 and neg & low == 0:
                new_high |= head
        return Approximant(fw, bits.ident(new_low), bits.ident(new_high))

    return Approximator(fw, apply, name="fitting")


def _members(ident: str) -> frozenset[str]:
    if not (ident.startswith("{") and ident.endswith("}")):
        raise InputError(f"not a set identifier: {ident!r}")
    inner = ident[1:-1]
    return frozenset(inner.split(",")) if inner else frozenset()


# ---------------------------------------------------------------------------
# the independent oracle


@dataclass(frozen=True)
class LpOracle:
    """Ground-truth semantics computed without any framework machinery."""

    answer_sets: tuple[frozenset[str], ...]
    wf_true: frozenset[str]
    wf_possible: frozenset[str]  # atoms not false in the well-founded model
    supported: tuple[frozenset[str], ...]


def lp_oracle(program: NormalLogicProgram, *, atom_cap: int = DEFAULT_ATOM_CAP) -> LpOracle:
    """Answer sets by reduct enumeration, well-founded by the alternating
    fixpoint, supported models by direct closure checking."""
    if len(program.atoms) > atom_cap:
        raise SizeCapError(f"{len(program.atoms)} atoms exceed the cap of {atom_cap}")
    bits, rules = _compiled(program)
    n = len(program.atoms)

    def reduct_lfp(imask: int) -> int:
        kept = [(h, p) for h, p, neg in rules if neg & imask == 0]
        cur = 0
        while True:
            nxt = 0
            for h, p in kept:
                if p & ~cur == 0:
                    nxt |= h
            if nxt == cur:
                return cur
            cur = nxt

    answers = []
    supported = []
    for imask in range(1 << n):
        if reduct_lfp(imask) == imask:
            answers.append(bits.unmask(imask))
        if _consequence(rules, imask) == imask:
            supported.append(bits.unmask(imask))

    true = 0
    while True:
        nxt = reduct_lfp(reduct_lfp(true))
        if nxt == true:
            break
        true = nxt
    possible = reduct_lfp(true)
    return LpOracle(
        answer_sets=tuple(sorted(answers, key=sorted)),
        wf_true=bits.unmask(true),
        wf_possible=bits.unmask(possible),
        supported=tuple(sorted(supported, key=sorted)),
    )
