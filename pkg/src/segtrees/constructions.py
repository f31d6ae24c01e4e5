"""Closed-form SEG labelings for every covered diameter-4 family.

Each rule below realizes one branch of the classification: given the
substitution parameters (r, s, t) it writes explicit labels onto spine and
leaf edges.  Rules are named by the dispatch tags in ``trees.classify``.
Every constructed labeling passes through the verifier before it is
returned; a formula bug therefore surfaces as ConstructionFault, never as a
silently wrong answer.

Conventions shared by the rules: spine edge i is ``v<i>``; leaf edges of
v_i are ``v<i>.<m>``, m starting at 1.  For a branch vertex, an even leaf
count 2b is consumed as b (+x, -x) pairs; an odd count 2b+1 leaves one
unpaired first leaf that the rules label explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .labeling import EdgeLabeling, verify
from .trees import (
    CONSTRUCTIVE,
    NOT_SEG,
    Classification,
    TreeSpec,
    build_tree,
    classify,
    leaf_edge_id,
    spine_edge_id,
)

LABELED = "labeled"
PROVED_NOT_SEG = "not_seg"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class LabelOutcome:
    kind: str
    tag: str
    labeling: EdgeLabeling | None = None
    case: str | None = None

    @property
    def is_labeled(self) -> bool:
        return self.kind == LABELED


def Labeled(f: EdgeLabeling, tag: str, case: str | None = None) -> LabelOutcome:
    return LabelOutcome(LABELED, tag, f, case)


def ProvedNotSEG(tag: str) -> LabelOutcome:
    return LabelOutcome(PROVED_NOT_SEG, tag)


def Unknown(tag: str) -> LabelOutcome:
    return LabelOutcome(UNKNOWN, tag)


class WrongFamily(ValueError):
    """Spec routed to a labeler for a different family."""


class ConstructionFault(RuntimeError):
    """A rule produced a labeling that failed verification (formula bug)."""

    def __init__(self, spec: TreeSpec, tag: str, detail: str):
        self.spec = spec
        self.tag = tag
        super().__init__(f"{tag} on {spec}: {detail}")


class _Builder:
    """Collision-checked edge label assignment."""

    def __init__(self, spec: TreeSpec, tag: str):
        self.spec = spec
        self.tag = tag
        self.f: EdgeLabeling = {}

    def _put(self, eid: str, value: int) -> None:
        if eid in self.f:
            raise ConstructionFault(
                self.spec, self.tag, f"edge {eid} assigned twice ({self.f[eid]}, {value})"
            )
        self.f[eid] = value

    def spine(self, i: int, value: int) -> None:
        if not 1 <= i <= self.spec.n:
            raise ConstructionFault(self.spec, self.tag, f"spine index {i} out of range")
        self._put(spine_edge_id(i), value)

    def leaf(self, i: int, m: int, value: int) -> None:
        if not 1 <= m <= self.spec.a(i):
            raise ConstructionFault(self.spec, self.tag, f"leaf ({i},{m}) out of range")
        self._put(leaf_edge_id(i, m), value)

    def pair(self, i: int, m: int, value: int) -> None:
        """Leaf pair (+value, -value) at positions (2m-1, 2m) under v_i."""
        self.leaf(i, 2 * m - 1, value)
        self.leaf(i, 2 * m, -value)

    def pair_shifted(self, i: int, m: int, value: int) -> None:
        """Leaf pair (+value, -value) at positions (2m, 2m+1) under v_i."""
        self.leaf(i, 2 * m, value)
        self.leaf(i, 2 * m + 1, -value)


# ---------------------------------------------------------------------------
# caterpillars, q even
# ---------------------------------------------------------------------------

def _cat_q_even_j_even_both_even(B: _Builder, r: int, s: int, t: int) -> None:
    """j = 2r, counts 2s and 2t, 1 <= s <= t; q = 2(r+s+t+1)."""
    for i in range(1, r + 2):
        B.spine(2 * i - 1, i)
        B.spine(2 * i, -i)
    for i in range(1, s + 1):
        B.pair(2 * r + 1, i, r + 1 + i)
    for i in range(1, t + 1):
        B.pair(2 * r + 2, i, r + s + 1 + i)


def _cat_q_even_j_even_both_odd(B: _Builder, r: int, s: int, t: int) -> None:
    """j = 2r, counts 2s-1 and 2t-1, 1 <= s <= t; q = 2(r+s+t)."""
    B.spine(2 * r + 1, 1)
    B.spine(2 * r + 2, -1)
    B.leaf(2 * r + 1, 1, -2)
    B.leaf(2 * r + 2, 1, 2)
    for i in range(1, r + 1):
        B.spine(2 * i - 1, 2 + i)
        B.spine(2 * i, -(2 + i))
    for i in range(1, s):
        B.pair_shifted(2 * r + 1, i, r + 2 + i)
    for i in range(1, t):
        B.pair_shifted(2 * r + 2, i, r + s + 1 + i)


def _cat_q_even_j_odd(B: _Builder, r: int, s: int, t: int) -> None:
    """j = 2r-1, counts 2s then 2t-1; r, s, t >= 1; q = 2(r+s+t)."""
    B.spine(2 * r + 1, 1)
    B.leaf(2 * r + 1, 1, -1)
    for i in range(1, r + 1):
        B.spine(2 * i - 1, 1 + i)
        B.spine(2 * i, -(1 + i))
    for i in range(1, s + 1):
        B.pair(2 * r, i, r + 1 + i)
    for i in range(1, t):
        B.pair_shifted(2 * r + 1, i, r + s + 1 + i)


# ---------------------------------------------------------------------------
# caterpillars, q odd
# ---------------------------------------------------------------------------

def _cat_q_odd_j_even(B: _Builder, r: int, s: int, t: int) -> None:
    """j = 2r, counts 2s then 2t-1; r >= 0, s, t >= 1; q = 2(r+s+t)+1."""
    big = r + s + t
    B.spine(2 * r + 1, 0)
    B.spine(2 * r + 2, 1)
    B.leaf(2 * r + 1, 1, -1)
    B.leaf(2 * r + 1, 2, -big)
    B.leaf(2 * r + 2, 1, big)
    for i in range(1, r + 1):
        B.spine(2 * i - 1, 1 + i)
        B.spine(2 * i, -(1 + i))
    for i in range(2, s + 1):
        B.pair(2 * r + 1, i, r + i)
    for i in range(1, t):
        B.pair_shifted(2 * r + 2, i, r + s + i)


def _cat_q_odd_j_odd_evens(B: _Builder, r: int, s: int, t: int) -> None:
    """j = 2r-1, counts 2s and 2t, 1 <= s <= t; q = 2(r+s+t)+1."""
    big = r + s + t
    B.spine(1, 1)
    B.spine(2 * r, 0)
    B.spine(2 * r + 1, big)
    B.leaf(2 * r, 1, -1)
    B.leaf(2 * r, 2, -big)
    for i in range(1, r):
        B.spine(2 * i, 1 + i)
        B.spine(2 * i + 1, -(1 + i))
    for i in range(1, s):
        B.pair(2 * r, i + 1, r + i)
    for i in range(1, t + 1):
        B.pair(2 * r + 1, i, r + s - 1 + i)


def _cat_q_odd_single_leaf(B: _Builder, r: int, t: int) -> None:
    """j = 2r+1 >= 3, counts 1 and 2t+1 >= 3; q = 2(r+t+2)+1."""
    big = r + t + 2
    B.spine(1, -1)
    B.spine(2, -2)
    B.spine(3, 3)
    B.spine(2 * r + 2, 1)
    B.spine(2 * r + 3, 0)
    B.leaf(2 * r + 2, 1, big)
    B.leaf(2 * r + 3, 1, 2)
    B.leaf(2 * r + 3, 2, -3)
    B.leaf(2 * r + 3, 3, -big)
    for i in range(2, r + 1):
        B.spine(2 * i, i + 2)
        B.spine(2 * i + 1, -(i + 2))
    for i in range(2, t + 1):
        B.pair_shifted(2 * r + 3, i, r + 1 + i)


def _cat_q_odd_j_odd_odds(B: _Builder, r: int, s: int, t: int) -> None:
    """j = 2r+1, counts 2s+1 and 2t+1, 1 <= s <= t; q = 2(r+s+t+2)+1."""
    big = r + s + t + 2
    B.spine(1, big)
    B.spine(2 * r + 2, 1)
    B.spine(2 * r + 3, 0)
    B.leaf(2 * r + 2, 1, -1)
    B.leaf(2 * r + 2, 2, -2)
    B.leaf(2 * r + 2, 3, 3)
    B.leaf(2 * r + 3, 1, 2)
    B.leaf(2 * r + 3, 2, -3)
    B.leaf(2 * r + 3, 3, -big)
    for i in range(1, r + 1):
        B.spine(2 * i, 3 + i)
        B.spine(2 * i + 1, -(3 + i))
    for i in range(2, s + 1):
        B.pair_shifted(2 * r + 2, i, r + 2 + i)
    for i in range(2, t + 1):
        B.pair_shifted(2 * r + 3, i, r + s + 1 + i)


# ---------------------------------------------------------------------------
# lobsters, q even
# ---------------------------------------------------------------------------

def _leaf_groups(B: _Builder, base: int, start_vertex: int) -> None:
    """Paired leaves for all branch vertices from start_vertex on.

    Labels run consecutively from base+1; a vertex with count 2b or 2b+1
    consumes b magnitudes.  Even counts pair at (2m-1, 2m); odd counts keep
    position 1 free (labeled explicitly elsewhere) and pair at (2m, 2m+1).
    """
    spec = B.spec
    acc = 0
    for i in range(start_vertex, spec.n + 1):
        a = spec.a(i)
        for m in range(1, a // 2 + 1):
            value = base + m + acc
            if a % 2 == 0:
                B.pair(i, m, value)
            else:
                B.pair_shifted(i, m, value)
        acc += a // 2


def _lob_even_size_l_odd(B: _Builder, rs: int, t: int) -> None:
    """q even, l = 2t+1; j+k = 2rs; branch blocks j+1..n."""
    spec = B.spec
    n = spec.n
    B.spine(2 * rs + 1, 1)
    for i in range(1, t + 1):
        B.spine(2 * (rs + i), -(2 * i - 1))
        B.spine(2 * (rs + i) + 1, 2 * i + 1)
    B.leaf(n, 1, -(2 * t + 1))
    for i in range(1, t + 1):
        B.leaf(2 * (rs + i) - 1, 1, -2 * (t + 1 - i))
        B.leaf(2 * (rs + i), 1, 2 * (t + 1 - i))
    for i in range(1, rs + 1):
        B.spine(2 * i - 1, 2 * t + 1 + i)
        B.spine(2 * i, -(2 * t + 1 + i))
    _leaf_groups(B, rs + 2 * t + 1, spec.j + 1)


def _lob_even_size_l_even(B: _Builder, rs: int, t: int) -> None:
    """q even, l = 2t; j+k = 2rs; branch blocks j+1..n."""
    spec = B.spec
    for i in range(1, t + 1):
        B.spine(2 * (rs + i) - 1, 2 * i - 1)
        B.spine(2 * (rs + i), -(2 * i - 1))
        B.leaf(2 * (rs + i) - 1, 1, -2 * (t + 1 - i))
        B.leaf(2 * (rs + i), 1, 2 * (t + 1 - i))
    for i in range(1, rs + 1):
        B.spine(2 * i - 1, 2 * t + i)
        B.spine(2 * i, -(2 * t + i))
    _leaf_groups(B, rs + 2 * t, spec.j + 1)


# ---------------------------------------------------------------------------
# lobsters, q odd
# ---------------------------------------------------------------------------

def _lob_jkl_even_odd_odd(B: _Builder, r: int, s: int, t: int) -> None:
    """j = 2r, k = 2s-1, l = 2t+1; s+t >= 2; q = 2(r+s+2t+sum b)+1.

    Branch blocks: even counts at 2r+1 .. 2(r+s)-1, odd counts at
    2(r+s) .. n = 2(r+s+t).
    """
    spec = B.spec
    n = spec.n
    sb = sum(spec.a(i) // 2 for i in range(spec.j + 1, n + 1))
    big = r + s + 2 * t + sb
    B.spine(2 * r + 1, 0)
    if t == 0:
        # single odd-count vertex at 2(r+s); here s >= 2
        B.spine(2 * (r + s), 1)
        B.leaf(2 * r + 1, 1, -1)
        B.leaf(2 * (r + s), 1, big)
        B.leaf(2 * r + 1, 2, -big)
        for i in range(1, r + 1):
            B.spine(2 * i - 1, 1 + i)
            B.spine(2 * i, -(1 + i))
        for i in range(1, s):
            B.spine(2 * (r + i), r + 1 + i)
            B.spine(2 * (r + i) + 1, -(r + 1 + i))
        base = r + s - 1
    else:
        for i in range(1, t + 1):
            B.spine(2 * (r + s + i - 1), 2 * i - 1)
            B.spine(2 * (r + s + i) - 1, -(2 * i - 1))
        B.spine(2 * (r + s + t), 2 * t + 1)
        B.leaf(2 * r + 1, 1, -(2 * t + 1))
        B.leaf(2 * (r + s + t), 1, -2)
        B.leaf(2 * r + 1, 2, 2)
        B.leaf(2 * (r + s), 1, big)
        B.leaf(2 * (r + s) + 1, 1, -big)
        for i in range(1, t):
            B.leaf(2 * (r + s + i), 1, -2 * (t - i + 1))
            B.leaf(2 * (r + s + i) + 1, 1, 2 * (t - i + 1))
        for i in range(1, r + 1):
            B.spine(2 * i - 1, 2 * t + 1 + i)
            B.spine(2 * i, -(2 * t + 1 + i))
        for i in range(1, s):
            B.spine(2 * (r + i), r + 2 * t + 1 + i)
            B.spine(2 * (r + i) + 1, -(r + 2 * t + 1 + i))
        base = r + s + 2 * t - 1
    # v_{2r+1} already has its first pair of leaves labeled; continue from m=2
    for m in range(2, spec.a(2 * r + 1) // 2 + 1):
        B.pair(2 * r + 1, m, base + m)
    acc = spec.a(2 * r + 1) // 2
    for i in range(2 * r + 2, n + 1):
        a = spec.a(i)
        for m in range(1, a // 2 + 1):
            value = base + m + acc
            if a % 2 == 0:
                B.pair(i, m, value)
            else:
                B.pair_shifted(i, m, value)
        acc += a // 2


def _lob_jkl_even_odd_even(B: _Builder, r: int, s: int, t: int) -> None:
    """j = 2r, k = 2s+1 >= 3, l = 2t; q = 2(r+s+2t+sum b)+1.

    Branch blocks: even counts at 2r+1 .. 2(r+s)+1, odd counts at
    2(r+s)+2 .. n = 2(r+s+t)+1.
    """
    spec = B.spec
    n = spec.n
    sb = sum(spec.a(i) // 2 for i in range(spec.j + 1, n + 1))
    B.spine(2 * r + 1, 0)
    if t == 0:
        big = r + s + sb
        B.spine(2 * r + 2, 1)
        B.spine(2 * r + 3, big)
        B.leaf(2 * r + 1, 1, -1)
        B.leaf(2 * r + 1, 2, -big)
        for i in range(1, r + 1):
            B.spine(2 * i - 1, 1 + i)
            B.spine(2 * i, -(1 + i))
        for i in range(2, s + 1):
            B.spine(2 * (r + i), r + i)
            B.spine(2 * (r + i) + 1, -(r + i))
        base = r + s - 1
    else:
        big = r + s + 2 * t + sb
        B.spine(2 * r + 2, 2)
        B.spine(2 * r + 3, -(2 * t + 1))
        B.leaf(2 * r + 1, 1, -2)
        B.leaf(2 * r + 1, 2, 2 * t + 1)
        B.leaf(2 * (r + s + 1), 1, big)
        B.leaf(2 * (r + s + 1) + 1, 1, -big)
        for i in range(1, r + 1):
            B.spine(2 * i - 1, 2 * t + 1 + i)
            B.spine(2 * i, -(2 * t + 1 + i))
        for i in range(2, s + 1):
            B.spine(2 * (r + i), 2 * t + r + i)
            B.spine(2 * (r + i) + 1, -(2 * t + r + i))
        for i in range(1, t + 1):
            B.spine(2 * (r + s + i), 2 * i - 1)
            B.spine(2 * (r + s + i) + 1, -(2 * i - 1))
        for i in range(2, t + 1):
            B.leaf(2 * (r + s + i), 1, -2 * (t + 2 - i))
            B.leaf(2 * (r + s + i) + 1, 1, 2 * (t + 2 - i))
        base = 2 * t + r + s - 1
    for m in range(2, spec.a(2 * r + 1) // 2 + 1):
        B.pair(2 * r + 1, m, base + m)
    acc = spec.a(2 * r + 1) // 2
    for i in range(2 * r + 2, n + 1):
        a = spec.a(i)
        for m in range(1, a // 2 + 1):
            value = base + m + acc
            if a % 2 == 0:
                B.pair(i, m, value)
            else:
                B.pair_shifted(i, m, value)
        acc += a // 2


def _lob_jkl_odd_even_small_l(B: _Builder, r: int, s: int, l: int) -> None:
    """j = 2r+1, k = 2s >= 2, l in {1, 2}; q = 2(r+s+l+sum b)+1.

    Branch blocks: even counts at 2r+2 .. 2(r+s)+1, odd counts at the last
    l spine positions.
    """
    spec = B.spec
    n = spec.n
    sb = sum(spec.a(i) // 2 for i in range(spec.j + 1, n + 1))
    if l == 1:
        big = r + s + 1 + sb
        B.spine(2 * r + 2, 0)
        B.spine(n, 1)
        B.leaf(2 * r + 2, 1, -1)
        B.leaf(n, 1, big)
        B.leaf(2 * r + 2, 2, -big)
        for i in range(1, r + 1):
            B.spine(2 * i - 1, 1 + i)
            B.spine(2 * i, -(1 + i))
        B.spine(2 * r + 1, r + 2)
        B.spine(2 * r + 3, -(r + 2))
        for i in range(2, s + 1):
            B.spine(2 * (r + i), r + 1 + i)
            B.spine(2 * (r + i) + 1, -(r + 1 + i))
        for m in range(2, spec.a(2 * r + 2) // 2 + 1):
            B.pair(2 * r + 2, m, r + s + m)
        acc = spec.a(2 * r + 2) // 2
        for i in range(2 * r + 3, n + 1):
            a = spec.a(i)
            for m in range(1, a // 2 + 1):
                value = r + s + m + acc
                if a % 2 == 0:
                    B.pair(i, m, value)
                else:
                    B.pair_shifted(i, m, value)
            acc += a // 2
        return
    # l == 2
    big = r + s + 2 + sb
    B.spine(2 * r + 2, 0)
    B.spine(1, 1)
    B.leaf(2 * r + 2, 1, -1)
    B.spine(2 * (r + s + 1), 2)
    B.spine(2 * (r + s + 1) + 1, -2)
    B.leaf(2 * r + 3, 1, 3)
    B.leaf(2 * r + 3, 2, -3)
    B.leaf(2 * (r + s + 1), 1, -4)
    B.leaf(2 * (r + s + 1) + 1, 1, 4)
    B.spine(2 * r + 3, big)
    B.leaf(2 * r + 2, 2, -big)
    for i in range(1, r + 1):
        B.spine(2 * i, 4 + i)
        B.spine(2 * i + 1, -(4 + i))
    for i in range(2, s + 1):
        B.spine(2 * (r + i), r + 3 + i)
        B.spine(2 * (r + i) + 1, -(r + 3 + i))
    # first branch vertex runs one magnitude ahead of the generic base
    for m in range(2, spec.a(2 * r + 2) // 2 + 1):
        B.pair(2 * r + 2, m, r + s + 2 + m)
    acc = spec.a(2 * r + 2) // 2
    for i in range(2 * r + 3, n + 1):
        a = spec.a(i)
        start = 2 if i == 2 * r + 3 else 1
        for m in range(start, a // 2 + 1):
            value = r + s + 1 + m + acc
            if a % 2 == 0:
                B.pair(i, m, value)
            else:
                B.pair_shifted(i, m, value)
        acc += a // 2


def _build_for(cls: Classification) -> EdgeLabeling:
    spec = cls.spec
    B = _Builder(spec, cls.tag)
    p = cls.params
    tag = cls.tag
    if tag == "cat-q-even-j-even":
        if cls.case == "both-even":
            _cat_q_even_j_even_both_even(B, p["r"], p["s"], p["t"])
        else:
            _cat_q_even_j_even_both_odd(B, p["r"], p["s"], p["t"])
    elif tag == "cat-q-even-j-odd":
        _cat_q_even_j_odd(B, p["r"], p["s"], p["t"])
    elif tag == "cat-q-odd-j-even":
        _cat_q_odd_j_even(B, p["r"], p["s"], p["t"])
    elif tag == "cat-q-odd-j-odd-evens":
        _cat_q_odd_j_odd_evens(B, p["r"], p["s"], p["t"])
    elif tag == "cat-q-odd-single-leaf":
        _cat_q_odd_single_leaf(B, p["r"], p["t"])
    elif tag == "cat-q-odd-j-odd-odds":
        _cat_q_odd_j_odd_odds(B, p["r"], p["s"], p["t"])
    elif tag == "lob-jkl-odd-odd-odd" or tag == "lob-jkl-even-even-odd":
        _lob_even_size_l_odd(B, (spec.j + spec.k) // 2, p["t"])
    elif tag == "lob-jkl-odd-odd-even" or tag == "lob-jkl-even-even-even":
        _lob_even_size_l_even(B, (spec.j + spec.k) // 2, p["t"])
    elif tag == "lob-jkl-even-odd-odd":
        _lob_jkl_even_odd_odd(B, p["r"], p["s"], p["t"])
    elif tag == "lob-jkl-even-odd-even":
        _lob_jkl_even_odd_even(B, p["r"], p["s"], p["t"])
    elif tag == "lob-jkl-odd-even-small-l":
        _lob_jkl_odd_even_small_l(B, p["r"], p["s"], spec.l)
    else:
        raise ConstructionFault(spec, tag, "no rule implemented for this tag")
    return B.f


def _run(cls: Classification) -> LabelOutcome:
    if cls.status == NOT_SEG:
        return ProvedNotSEG(cls.tag)
    if cls.status != CONSTRUCTIVE:
        return Unknown(cls.tag)
    f = _build_for(cls)
    report = verify(build_tree(cls.spec), f)
    if not report.is_seg:
        detail = "; ".join(v.describe() for v in report.violations)
        raise ConstructionFault(cls.spec, cls.tag, detail)
    return Labeled(f, cls.tag, cls.case)


def _family_labeler(spec: TreeSpec, family: str) -> LabelOutcome:
    if spec.family != family:
        raise WrongFamily(f"{spec} is a {spec.family}, not a {family}")
    return _run(classify(spec))


def label_even_caterpillar(spec: TreeSpec) -> LabelOutcome:
    return _family_labeler(spec, "EvenCaterpillar")


def label_odd_caterpillar(spec: TreeSpec) -> LabelOutcome:
    return _family_labeler(spec, "OddCaterpillar")


def label_even_lobster(spec: TreeSpec) -> LabelOutcome:
    return _family_labeler(spec, "EvenLobster")


def label_odd_lobster(spec: TreeSpec) -> LabelOutcome:
    return _family_labeler(spec, "OddLobster")


def label_any(
    spec: TreeSpec,
    search_budget: int | None = None,
    override_guard: bool = False,
) -> LabelOutcome:
    """Dispatch to the right family labeler; optionally fall back to search.

    With a search budget, an Unknown outcome (conjectured or uncovered
    family) is retried exhaustively: a found labeling upgrades to
    Labeled(..., "by-search"), full exhaustion to ProvedNotSEG("by-exhaustion"),
    and a spent budget stays Unknown.
    """
    outcome = _run(classify(spec))
    if outcome.kind != UNKNOWN or search_budget is None:
        return outcome
    from .search import FIND_ONE, BUDGET_EXCEEDED, EXHAUSTED_NONE, SearchConfig, search

    result = search(
        spec,
        SearchConfig(node_budget=search_budget, mode=FIND_ONE, override_guard=override_guard),
    )
    if result.outcome == BUDGET_EXCEEDED:
        return outcome
    if result.outcome == EXHAUSTED_NONE:
        return ProvedNotSEG("by-exhaustion")
    return Labeled(result.labeling, "by-search")
