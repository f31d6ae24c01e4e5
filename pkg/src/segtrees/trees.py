"""Rooted model of diameter-4 trees given by leaf-count specs.

A tree ``RT(a_1, ..., a_n)`` has a root ``v0``, spine vertices ``v1 .. vn``
adjacent to the root, and ``a_i`` pendant leaves under ``v_i``.  Specs are
kept in canonical order: zero counts first, then positive even counts
nondecreasing, then positive odd counts nondecreasing.  With
``(j, k, l) = (#zeros, #positive evens, #positive odds)``, diameter 4 is
exactly ``k + l >= 2``; ``k + l == 2`` is the caterpillar shape and
``k + l >= 3`` the lobster shape.  Edge count ``q = n + sum(a_i)``, vertex
count ``p = q + 1``.

``classify`` is total: every valid spec is routed to exactly one outcome,
either a constructive labeling rule, a proved-empty family, a conjectured
family, or the one explicitly uncovered region (j odd, k >= 4 even, l = 0).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

Q_LIMIT = 10**6  # labels must stay comfortably inside machine ints


class SpecSyntaxError(ValueError):
    """Malformed spec text (bad token, unbalanced parens, bad exponent)."""


class EmptySpec(SpecSyntaxError):
    """Spec with no counts at all."""


class NotDiameterFour(ValueError):
    """Counts describe a tree of diameter < 4 (fewer than two branch vertices)."""


class EmptyRange(ValueError):
    """enumerate_specs called with max_q below the smallest valid tree (q=4)."""


@dataclass(frozen=True)
class TreeSpec:
    """Canonical leaf-count sequence of a diameter-4 tree."""

    counts: tuple[int, ...]

    @cached_property
    def n(self) -> int:
        return len(self.counts)

    @cached_property
    def j(self) -> int:
        return sum(1 for a in self.counts if a == 0)

    @cached_property
    def k(self) -> int:
        return sum(1 for a in self.counts if a > 0 and a % 2 == 0)

    @cached_property
    def l(self) -> int:
        return sum(1 for a in self.counts if a % 2 == 1)

    @cached_property
    def q(self) -> int:
        return self.n + sum(self.counts)

    @cached_property
    def p(self) -> int:
        return self.q + 1

    @cached_property
    def family(self) -> str:
        shape = "Caterpillar" if self.k + self.l == 2 else "Lobster"
        size = "Even" if self.q % 2 == 0 else "Odd"
        return size + shape

    def a(self, i: int) -> int:
        """Leaf count of spine vertex v_i, 1-based."""
        return self.counts[i - 1]

    def format(self) -> str:
        """Compressed spec string, runs of equal counts in exponent notation."""
        parts: list[str] = []
        i = 0
        while i < self.n:
            run = 1
            while i + run < self.n and self.counts[i + run] == self.counts[i]:
                run += 1
            parts.append(f"{self.counts[i]}^{run}" if run > 1 else str(self.counts[i]))
            i += run
        return "RT(" + ",".join(parts) + ")"

    def __str__(self) -> str:
        return self.format()


def canonicalize(counts) -> TreeSpec:
    """Sort raw counts into canonical order and validate the shape.

    Stable within each block (zeros / positive evens / positive odds), so
    equal counts keep their relative order.  Raises EmptySpec on no counts,
    NotDiameterFour when fewer than two counts are positive.
    """
    counts = list(counts)
    if not counts:
        raise EmptySpec("spec has no counts")
    for a in counts:
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise SpecSyntaxError(f"counts must be nonnegative integers, got {a!r}")
    zeros = [a for a in counts if a == 0]
    evens = sorted(a for a in counts if a > 0 and a % 2 == 0)
    odds = sorted(a for a in counts if a % 2 == 1)
    if len(evens) + len(odds) < 2:
        raise NotDiameterFour(
            "diameter 4 needs at least two spine vertices with leaves"
        )
    spec = TreeSpec(tuple(zeros + evens + odds))
    if spec.q > Q_LIMIT:
        raise ValueError(f"q={spec.q} exceeds supported limit {Q_LIMIT}")
    return spec


_ITEM_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_spec(text: str) -> TreeSpec:
    """Parse spec text such as ``RT(0^4,2,6)`` or ``0,0,0,0,2,6``.

    The ``RT(...)`` wrapper is optional and case-insensitive; whitespace is
    ignored everywhere; ``m^r`` repeats count m exactly r times (r >= 1).
    The result is canonicalized.
    """
    if not isinstance(text, str):
        raise SpecSyntaxError(f"spec must be a string, got {type(text).__name__}")
    # whitespace is allowed around tokens but never inside one: "1 1" is bad
    compact = text.strip()
    wrapped = re.match(r"^[rR][tT]\s*\((.*)\)$", compact, re.DOTALL)
    if wrapped is not None:
        compact = wrapped.group(1).strip()
    elif compact.lower().startswith("rt"):
        raise SpecSyntaxError(f"unbalanced RT(...) wrapper in {text!r}")
    if compact == "":
        raise EmptySpec(f"no counts in spec {text!r}")
    counts: list[int] = []
    for item in compact.split(","):
        m = _ITEM_RE.match(item.strip())
        if m is None:
            raise SpecSyntaxError(f"bad item {item!r} in spec {text!r}")
        value = int(m.group(1))
        repeat = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(2) is not None and repeat < 1:
            raise SpecSyntaxError(f"exponent must be >= 1 in item {item!r}")
        counts.extend([value] * repeat)
    return canonicalize(counts)


# ---------------------------------------------------------------------------
# rooted tree structure
# ---------------------------------------------------------------------------

def spine_edge_id(i: int) -> str:
    """Edge from the root to spine vertex v_i, keyed by its child endpoint."""
    return f"v{i}"


def leaf_edge_id(i: int, m: int) -> str:
    """Edge from v_i to its m-th leaf (1-based), keyed by its child endpoint."""
    return f"v{i}.{m}"


@dataclass(frozen=True)
class RootedTree:
    """Explicit edge/vertex structure of a spec's tree.

    Edge identifiers equal the child endpoint's vertex identifier, so the
    edge map of a labeling doubles as a vertex-addressed structure.  Edge
    order is deterministic: spine edges v1..vn, then each vertex's leaf
    edges in index order.
    """

    spec: TreeSpec
    spine_edges: tuple[str, ...] = field(repr=False)
    leaf_edges: tuple[tuple[str, ...], ...] = field(repr=False)  # per spine vertex

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def p(self) -> int:
        return self.spec.p

    @cached_property
    def edge_ids(self) -> tuple[str, ...]:
        out = list(self.spine_edges)
        for group in self.leaf_edges:
            out.extend(group)
        return tuple(out)

    @cached_property
    def vertex_ids(self) -> tuple[str, ...]:
        return ("v0",) + self.edge_ids

    @cached_property
    def branch_indices(self) -> tuple[int, ...]:
        """Spine indices with at least one leaf (internal vertices)."""
        return tuple(i for i in range(1, self.n + 1) if self.spec.a(i) > 0)

    @cached_property
    def childless_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.spec.a(i) == 0)

    def leaf_group(self, i: int) -> tuple[str, ...]:
        return self.leaf_edges[i - 1]


def build_tree(spec: TreeSpec) -> RootedTree:
    spine = tuple(spine_edge_id(i) for i in range(1, spec.n + 1))
    leaves = tuple(
        tuple(leaf_edge_id(i, m) for m in range(1, spec.a(i) + 1))
        for i in range(1, spec.n + 1)
    )
    return RootedTree(spec=spec, spine_edges=spine, leaf_edges=leaves)


# ---------------------------------------------------------------------------
# classification / dispatch
# ---------------------------------------------------------------------------

#: dispatch status values
CONSTRUCTIVE = "constructive"
NOT_SEG = "not_seg"
CONJECTURED = "conjectured"
UNCOVERED = "uncovered"


@dataclass(frozen=True)
class Classification:
    """Total routing of a spec to its labeling rule or knowledge status.

    ``tag`` names the applicable rule (or conjecture/uncovered region);
    ``case`` splits multi-case rules; ``params`` carries the substitution
    parameters (r, s, t and the per-branch-vertex half-counts b) so the
    labeler never re-derives them.
    """

    spec: TreeSpec
    family: str
    j: int
    k: int
    l: int
    q: int
    p: int
    status: str
    tag: str
    case: str | None = None
    params: dict = field(default_factory=dict)


def _b_values(spec: TreeSpec) -> tuple[int, ...]:
    # a_i = 2b_i for branch vertices with even count, a_i = 2b_i + 1 for odd
    return tuple(a // 2 for a in spec.counts[spec.j:])


def _classify_caterpillar(spec: TreeSpec) -> tuple[str, str, str | None, dict]:
    j = spec.j
    a1, a2 = spec.counts[j], spec.counts[j + 1]
    q_even = spec.q % 2 == 0
    if q_even:
        if j % 2 == 0:
            # j even and q even force a1, a2 of equal parity
            if a1 % 2 == 0:
                return (CONSTRUCTIVE, "cat-q-even-j-even", "both-even",
                        {"r": j // 2, "s": a1 // 2, "t": a2 // 2})
            return (CONSTRUCTIVE, "cat-q-even-j-even", "both-odd",
                    {"r": j // 2, "s": (a1 + 1) // 2, "t": (a2 + 1) // 2})
        # j odd forces opposite parity: canonical order puts the even count first
        return (CONSTRUCTIVE, "cat-q-even-j-odd", None,
                {"r": (j + 1) // 2, "s": a1 // 2, "t": (a2 + 1) // 2})
    if j % 2 == 0:
        # q odd with j even forces opposite parity
        return (CONSTRUCTIVE, "cat-q-odd-j-even", None,
                {"r": j // 2, "s": a1 // 2, "t": (a2 + 1) // 2})
    if a1 % 2 == 0:
        return (CONSTRUCTIVE, "cat-q-odd-j-odd-evens", None,
                {"r": (j + 1) // 2, "s": a1 // 2, "t": a2 // 2})
    # j odd, both counts odd
    if a1 == 1 and (j == 1 or a2 == 1):
        return (NOT_SEG, "cat-not-seg-ones", None, {})
    if a1 == 1:
        # here j >= 3 and a2 >= 3
        return (CONSTRUCTIVE, "cat-q-odd-single-leaf", None,
                {"r": (j - 1) // 2, "t": (a2 - 1) // 2})
    return (CONSTRUCTIVE, "cat-q-odd-j-odd-odds", None,
            {"r": (j - 1) // 2, "s": (a1 - 1) // 2, "t": (a2 - 1) // 2})


def _classify_lobster(spec: TreeSpec) -> tuple[str, str, str | None, dict]:
    j, k, l = spec.j, spec.k, spec.l
    b = _b_values(spec)
    if spec.q % 2 == 0:
        # q even means j and k share parity
        if j % 2 == 1:
            if l % 2 == 1:
                return (CONSTRUCTIVE, "lob-jkl-odd-odd-odd", None,
                        {"r": (j + 1) // 2, "s": (k - 1) // 2, "t": (l - 1) // 2, "b": b})
            return (CONSTRUCTIVE, "lob-jkl-odd-odd-even", None,
                    {"r": (j + 1) // 2, "s": (k - 1) // 2, "t": l // 2, "b": b})
        if l % 2 == 1:
            return (CONSTRUCTIVE, "lob-jkl-even-even-odd", None,
                    {"r": j // 2, "s": k // 2, "t": (l - 1) // 2, "b": b})
        return (CONSTRUCTIVE, "lob-jkl-even-even-even", None,
                {"r": j // 2, "s": k // 2, "t": l // 2, "b": b})
    # q odd: j and k of opposite parity
    if j % 2 == 0:
        # k odd >= 1
        if l % 2 == 1:
            case = "l-1" if l == 1 else "l-ge-3"
            return (CONSTRUCTIVE, "lob-jkl-even-odd-odd", case,
                    {"r": j // 2, "s": (k + 1) // 2, "t": (l - 1) // 2, "b": b})
        if k >= 3:
            case = "l-0" if l == 0 else "l-ge-2"
            return (CONSTRUCTIVE, "lob-jkl-even-odd-even", case,
                    {"r": j // 2, "s": (k - 1) // 2, "t": l // 2, "b": b})
        return (CONJECTURED, "conjecture-1", None, {})
    # j odd, k even
    if k == 0:
        if all(a in (0, 1) for a in spec.counts):
            return (NOT_SEG, "lob-not-seg-all-ones", None, {})
        if l % 2 == 1:
            return (CONJECTURED, "conjecture-3", None, {})
        return (CONJECTURED, "conjecture-2", None, {})
    if l == 0:
        # k even >= 4 here (k + l >= 3 and k even)
        return (UNCOVERED, "uncovered", None, {})
    if l <= 2:
        return (CONSTRUCTIVE, "lob-jkl-odd-even-small-l", f"l-{l}",
                {"r": (j - 1) // 2, "s": k // 2, "b": b})
    if l % 2 == 1:
        return (CONJECTURED, "conjecture-3", None, {})
    return (CONJECTURED, "conjecture-2", None, {})


def classify(spec: TreeSpec) -> Classification:
    if spec.k + spec.l == 2:
        status, tag, case, params = _classify_caterpillar(spec)
    else:
        status, tag, case, params = _classify_lobster(spec)
    return Classification(
        spec=spec, family=spec.family, j=spec.j, k=spec.k, l=spec.l,
        q=spec.q, p=spec.p, status=status, tag=tag, case=case, params=params,
    )


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _nondecreasing(start: int, budget: int):
    """Nondecreasing tuples of counts >= start with the same parity as start.

    Each count a costs a + 1 edges (its leaves plus its spine edge); total
    cost is capped by budget.
    """
    yield ()
    v = start
    while v + 1 <= budget:
        for rest in _nondecreasing(v, budget - (v + 1)):
            yield (v,) + rest
        v += 2


def enumerate_specs(max_q: int) -> list[TreeSpec]:
    """All canonical specs with q <= max_q, sorted by (q, length, counts)."""
    if max_q < 4:
        raise EmptyRange(f"no diameter-4 tree has q <= {max_q}")
    found: list[TreeSpec] = []
    for j in range(0, max_q - 3):
        budget = max_q - j
        for evens in _nondecreasing(2, budget):
            left = budget - sum(a + 1 for a in evens)
            for odds in _nondecreasing(1, left):
                if len(evens) + len(odds) < 2:
                    continue
                found.append(TreeSpec((0,) * j + evens + odds))
    found.sort(key=lambda s: (s.q, s.n, s.counts))
    return found
