"""Edge labelings of diameter-4 trees and the super edge-graceful test.

An edge labeling assigns each of the q edges a distinct value from the edge
target set: ``{+-1, ..., +-q/2}`` for even q, ``{0, +-1, ..., +-(q-1)/2}``
for odd q.  The induced vertex labeling sums the labels of the edges at each
vertex; the labeling is super edge-graceful (SEG) when the induced labels
form exactly the vertex target set of size p = q + 1.

Edges are keyed by their child endpoint (``v3`` for a spine edge, ``v3.2``
for a leaf edge), so an induced vertex labeling shares the key space plus
``v0`` for the root.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass

from .trees import RootedTree, TreeSpec, build_tree, parse_spec

EdgeLabeling = dict[str, int]
VertexLabeling = dict[str, int]


class DomainMismatch(ValueError):
    """Labeling keys differ from the tree's edge set."""

    def __init__(self, missing: tuple[str, ...], extra: tuple[str, ...]):
        self.missing = missing
        self.extra = extra
        super().__init__(f"missing edges {list(missing)}, unknown edges {list(extra)}")


class LabelingFormatError(ValueError):
    """Labeling file text is not the expected JSON object."""


def _symmetric_target(m: int) -> tuple[int, ...]:
    # the m integers of smallest magnitude, symmetric about 0:
    # even m -> +-1..+-m/2, odd m -> 0, +-1..+-(m-1)/2
    if m < 1:
        raise ValueError(f"target set size must be positive, got {m}")
    half = m // 2
    if m % 2 == 0:
        return tuple(range(-half, 0)) + tuple(range(1, half + 1))
    return tuple(range(-half, half + 1))


def edge_label_target(q: int) -> tuple[int, ...]:
    """Ascending edge label pool for a tree with q edges."""
    return _symmetric_target(q)


def vertex_label_target(p: int) -> tuple[int, ...]:
    """Ascending induced-label target for a tree with p vertices."""
    return _symmetric_target(p)


def _domain_diff(tree: RootedTree, f: EdgeLabeling) -> tuple[tuple[str, ...], tuple[str, ...]]:
    edge_set = set(tree.edge_ids)
    missing = tuple(e for e in tree.edge_ids if e not in f)
    extra = tuple(sorted(e for e in f if e not in edge_set))
    return missing, extra


def induce(tree: RootedTree, f: EdgeLabeling) -> VertexLabeling:
    """Induced vertex labeling; raises DomainMismatch unless f is total."""
    missing, extra = _domain_diff(tree, f)
    if missing or extra:
        raise DomainMismatch(missing, extra)
    out: VertexLabeling = {}
    root = 0
    for i in range(1, tree.n + 1):
        sid = tree.spine_edges[i - 1]
        branch = f[sid]
        root += f[sid]
        for eid in tree.leaf_group(i):
            out[eid] = f[eid]
            branch += f[eid]
        out[sid] = branch
    out["v0"] = root
    return out


def negate(f: EdgeLabeling) -> EdgeLabeling:
    """Negate every label; SEG is preserved (sums negate alongside)."""
    return {e: -v for e, v in f.items()}


@dataclass(frozen=True)
class Violation:
    """One way the labeling fails, with the offending items.

    kind DomainMismatch: missing/extra are edge identifiers.
    kind EdgeLabelsNotTargetSet / VertexLabelsNotTargetSet: missing holds
    target values not used, extra holds values used that are outside the
    target or duplicated.
    """

    kind: str
    missing: tuple = ()
    extra: tuple = ()

    def describe(self) -> str:
        parts = [self.kind]
        if self.missing:
            parts.append(f"missing {list(self.missing)}")
        if self.extra:
            parts.append(f"unexpected {list(self.extra)}")
        return ": ".join([parts[0], "; ".join(parts[1:])]) if len(parts) > 1 else parts[0]


@dataclass(frozen=True)
class VerificationReport:
    is_seg: bool
    violations: tuple[Violation, ...]
    vertex_labels: VertexLabeling | None = None


def _multiset_violation(kind: str, values, target) -> Violation | None:
    have = Counter(values)
    want = Counter(target)
    missing = tuple(sorted((want - have).elements()))
    extra = tuple(sorted((have - want).elements()))
    if missing or extra:
        return Violation(kind, missing, extra)
    return None


def verify(tree: RootedTree, f: EdgeLabeling) -> VerificationReport:
    """Full SEG check.  Never raises; every failure is listed in the report."""
    violations: list[Violation] = []
    missing, extra = _domain_diff(tree, f)
    if missing or extra:
        violations.append(Violation("DomainMismatch", missing, extra))
    edge_bad = _multiset_violation(
        "EdgeLabelsNotTargetSet", f.values(), edge_label_target(tree.q)
    )
    if edge_bad:
        violations.append(edge_bad)
    vertex_labels: VertexLabeling | None = None
    if not (missing or extra):
        vertex_labels = induce(tree, f)
        vertex_bad = _multiset_violation(
            "VertexLabelsNotTargetSet", vertex_labels.values(), vertex_label_target(tree.p)
        )
        if vertex_bad:
            violations.append(vertex_bad)
    return VerificationReport(
        is_seg=not violations, violations=tuple(violations), vertex_labels=vertex_labels
    )


# ---------------------------------------------------------------------------
# labeling files
# ---------------------------------------------------------------------------

def write_labeling(tree: RootedTree, f: EdgeLabeling) -> str:
    """Serialize as a JSON object {spec, edges}, edges in tree order."""
    missing, extra = _domain_diff(tree, f)
    if missing or extra:
        raise DomainMismatch(missing, extra)
    obj = {
        "spec": tree.spec.format(),
        "edges": {e: f[e] for e in tree.edge_ids},
    }
    return json.dumps(obj, indent=2) + "\n"


def read_labeling(text: str) -> tuple[TreeSpec, EdgeLabeling]:
    """Parse a labeling file; spec errors and shape errors raise ValueError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LabelingFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise LabelingFormatError("labeling file must be a JSON object")
    if not isinstance(obj.get("spec"), str):
        raise LabelingFormatError("field 'spec' must be a string")
    edges = obj.get("edges")
    if not isinstance(edges, dict):
        raise LabelingFormatError("field 'edges' must be an object")
    f: EdgeLabeling = {}
    for key, value in edges.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise LabelingFormatError(f"label for {key!r} must be an integer")
        f[str(key)] = value
    spec = parse_spec(obj["spec"])
    return spec, f


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

_DOT_SPEC_RE = re.compile(r"^\s*//\s*spec:\s*(.+?)\s*$", re.MULTILINE)


def to_dot(tree: RootedTree, f: EdgeLabeling | None = None) -> str:
    """Graphviz text; node labels are induced labels when f is given.

    The spec is embedded as a comment so the drawing round-trips back to a
    parseable spec.  Ordering is deterministic: root, spine, leaves.
    """
    vertex_labels = induce(tree, f) if f is not None else None

    def node_label(v: str) -> str:
        if vertex_labels is None:
            return v
        return str(vertex_labels[v]) if v != "v0" else str(vertex_labels["v0"])

    lines = ["graph segtree {", f"  // spec: {tree.spec.format()}"]
    for v in tree.vertex_ids:
        lines.append(f'  "{v}" [label="{node_label(v)}"];')
    for i in range(1, tree.n + 1):
        sid = tree.spine_edges[i - 1]
        attr = f' [label="{f[sid]}"]' if f is not None else ""
        lines.append(f'  "v0" -- "{sid}"{attr};')
        for eid in tree.leaf_group(i):
            attr = f' [label="{f[eid]}"]' if f is not None else ""
            lines.append(f'  "{sid}" -- "{eid}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot_spec(text: str) -> TreeSpec:
    """Recover the spec from a DOT export's embedded comment."""
    m = _DOT_SPEC_RE.search(text)
    if m is None:
        raise LabelingFormatError("no '// spec:' comment found in DOT text")
    return parse_spec(m.group(1))
