"""Concept trees and simple terminologies for the ALN description logic.

A concept is an immutable tree built from concept names, atomic negation,
unqualified number restrictions (at-least / at-most), universal role
quantification, and conjunction.  A terminology (TBox) is a sequence of
axioms, each either a definition ``A == C``, an inclusion ``A <= C``, or a
disjointness group over primitive names; the dependency graph between
defined names must be acyclic ("simple" terminology).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TBoxError

MAX_NUMBER_BOUND = 2**31 - 1


# ============================================================
# Concept AST
# ============================================================

class Concept:
    """Base class for concept tree nodes.  All nodes are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class Top(Concept):
    def __repr__(self):
        return "TOP"


@dataclass(frozen=True)
class Bottom(Concept):
    def __repr__(self):
        return "BOTTOM"


@dataclass(frozen=True)
class Name(Concept):
    name: str


@dataclass(frozen=True)
class NegName(Concept):
    """Atomic negation: wraps a concept name, never a compound."""

    name: str


@dataclass(frozen=True)
class AtLeast(Concept):
    bound: int
    role: str

    def __post_init__(self):
        if not (0 <= self.bound <= MAX_NUMBER_BOUND):
            raise ValueError(f"at-least bound out of range: {self.bound}")


@dataclass(frozen=True)
class AtMost(Concept):
    bound: int
    role: str

    def __post_init__(self):
        if not (0 <= self.bound <= MAX_NUMBER_BOUND):
            raise ValueError(f"at-most bound out of range: {self.bound}")


@dataclass(frozen=True)
class All(Concept):
    role: str
    filler: Concept


@dataclass(frozen=True)
class And(Concept):
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("a conjunction needs at least two conjuncts")
        if any(isinstance(p, And) for p in self.parts):
            raise ValueError("nested conjunctions must be flattened (use conj())")


TOP = Top()
BOTTOM = Bottom()


def conj(parts) -> Concept:
    """Build a conjunction, flattening nested ones and preserving order.

    Zero parts give TOP, a single part is returned as-is.
    """
    flat = []
    for p in parts:
        if isinstance(p, And):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if not flat:
        return TOP
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def conjuncts(c: Concept) -> tuple:
    """Top-level conjuncts of a concept (the concept itself if not an And)."""
    return c.parts if isinstance(c, And) else (c,)


def length(c: Concept) -> int:
    """Number of atomic concepts in c.

    Names, negated names, and number restrictions count one each; TOP and
    BOTTOM count zero; a universal quantification contributes only its
    filler's count.
    """
    if isinstance(c, (Name, NegName, AtLeast, AtMost)):
        return 1
    if isinstance(c, All):
        return length(c.filler)
    if isinstance(c, And):
        return sum(length(p) for p in c.parts)
    return 0  # TOP, BOTTOM


def quantification_nesting(c: Concept) -> int:
    """Depth of universal quantification: 0 for atoms, 1 + QN(filler) for
    a quantification, maximum over conjuncts for a conjunction."""
    if isinstance(c, All):
        return 1 + quantification_nesting(c.filler)
    if isinstance(c, And):
        return max(quantification_nesting(p) for p in c.parts)
    return 0


def concept_names(c: Concept) -> set:
    """All concept names occurring in c, at any depth, either polarity."""
    out = set()
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, (Name, NegName)):
            out.add(node.name)
        elif isinstance(node, All):
            stack.append(node.filler)
        elif isinstance(node, And):
            stack.extend(node.parts)
    return out


def role_names(c: Concept) -> set:
    """All role names occurring in c, at any depth."""
    out = set()
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, (AtLeast, AtMost)):
            out.add(node.role)
        elif isinstance(node, All):
            out.add(node.role)
            stack.append(node.filler)
        elif isinstance(node, And):
            stack.extend(node.parts)
    return out


# ============================================================
# Terminologies
# ============================================================

@dataclass(frozen=True)
class Definition:
    """A == C: the name is fully replaceable by its body."""

    name: str
    body: Concept


@dataclass(frozen=True)
class Inclusion:
    """A <= C: the body is a necessary but not sufficient condition."""

    name: str
    body: Concept


@dataclass(frozen=True)
class DisjointGroup:
    """Pairwise-disjoint primitive names; the label carries no semantics."""

    label: str
    names: frozenset


# --- validation violations -------------------------------------------------

@dataclass(frozen=True)
class CyclicTBox:
    cycle: tuple  # witness path, first name repeated at the end

    def __str__(self):
        return "cyclic terminology: " + " -> ".join(self.cycle)


@dataclass(frozen=True)
class DuplicateDefinition:
    name: str

    def __str__(self):
        return f"{self.name} appears on the left-hand side more than once"


@dataclass(frozen=True)
class DefinedNameInDisjointGroup:
    name: str

    def __str__(self):
        return f"defined name {self.name} used in a disjointness group"


@dataclass(frozen=True)
class InvalidDisjointGroup:
    label: str
    reason: str

    def __str__(self):
        return f"disjointness group {self.label}: {self.reason}"


@dataclass(frozen=True, eq=False)
class TBox:
    """A validated simple terminology.

    Built only through validate_tbox; immutable afterwards.  definitions /
    inclusions map a name to its body, disjoint_with maps each group member
    to the other members of its group.
    """

    axioms: tuple
    definitions: dict
    inclusions: dict
    disjoint_with: dict
    dependency_graph: dict  # name -> frozenset of names its body mentions
    depth: int

    @property
    def is_empty(self):
        return not self.axioms


def validate_tbox(axioms) -> TBox:
    """Validate a sequence of axioms and assemble a TBox.

    Raises TBoxError carrying every violation found: duplicate left-hand
    sides, defined names inside disjointness groups, undersized groups, and
    dependency cycles (with a witness path).
    """
    axioms = tuple(axioms)
    violations = []

    definitions, inclusions, disjoint_with = {}, {}, {}
    lhs_seen = set()
    for ax in axioms:
        if isinstance(ax, (Definition, Inclusion)):
            if ax.name in lhs_seen:
                violations.append(DuplicateDefinition(ax.name))
                continue
            lhs_seen.add(ax.name)
            (definitions if isinstance(ax, Definition) else inclusions)[ax.name] = ax.body
        elif isinstance(ax, DisjointGroup):
            if len(ax.names) < 2:
                violations.append(InvalidDisjointGroup(ax.label, "needs at least two names"))
            for n in ax.names:
                if n in disjoint_with:
                    violations.append(DuplicateDefinition(n))
                else:
                    disjoint_with[n] = frozenset(ax.names - {n})
        else:
            raise TypeError(f"not an axiom: {ax!r}")

    for ax in axioms:
        if isinstance(ax, DisjointGroup):
            for n in ax.names & definitions.keys():
                violations.append(DefinedNameInDisjointGroup(n))

    graph = {}
    for name, body in {**definitions, **inclusions}.items():
        graph[name] = frozenset(concept_names(body))

    cycle = _find_cycle(graph)
    if cycle is not None:
        violations.append(CyclicTBox(cycle))
        raise TBoxError(violations)
    if violations:
        raise TBoxError(violations)

    return TBox(
        axioms=axioms,
        definitions=definitions,
        inclusions=inclusions,
        disjoint_with=disjoint_with,
        dependency_graph=graph,
        depth=_longest_path(graph),
    )


def _find_cycle(graph):
    """Return a witness cycle (tuple of names, closed) or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {n: WHITE for n in graph}
    path = []

    def visit(node):
        color[node] = GREY
        path.append(node)
        for succ in sorted(graph.get(node, ())):
            if succ not in graph:
                continue
            if color[succ] == GREY:
                i = path.index(succ)
                return tuple(path[i:]) + (succ,)
            if color[succ] == WHITE:
                found = visit(succ)
                if found:
                    return found
        path.pop()
        color[node] = BLACK
        return None

    for n in sorted(graph):
        if color[n] == WHITE:
            found = visit(n)
            if found:
                return found
    return None


def _longest_path(graph):
    """Longest path length in an acyclic dependency graph."""
    memo = {}

    def depth_of(node):
        if node in memo:
            return memo[node]
        best = 0
        for succ in graph.get(node, ()):
            step = 1 if succ in graph else 1  # an edge to any mentioned name counts
            best = max(best, step + (depth_of(succ) if succ in graph else 0))
        memo[node] = best
        return best

    return max((depth_of(n) for n in graph), default=0)


EMPTY_TBOX = validate_tbox(())
