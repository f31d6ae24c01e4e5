import json
from pathlib import Path

import pytest

from segtrees import (
    DomainMismatch,
    LabelingFormatError,
    build_tree,
    edge_label_target,
    induce,
    negate,
    parse_dot_spec,
    parse_spec,
    read_labeling,
    to_dot,
    verify,
    vertex_label_target,
    write_labeling,
)

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"


def golden(name: str):
    spec, f = read_labeling((GOLDEN_DIR / name).read_text())
    return spec, build_tree(spec), f


def test_targets_even_and_odd():
    assert edge_label_target(4) == (-2, -1, 1, 2)
    assert edge_label_target(7) == (-3, -2, -1, 0, 1, 2, 3)
    assert vertex_label_target(5) == (-2, -1, 0, 1, 2)
    assert vertex_label_target(8) == (-4, -3, -2, -1, 1, 2, 3, 4)


def test_target_sizes_match_argument():
    for m in range(4, 30):
        tgt = edge_label_target(m)
        assert len(tgt) == m
        assert len(set(tgt)) == m
        assert sum(tgt) == 0


def test_induce_hand_example():
    tree = build_tree(parse_spec("RT(1,1)"))
    f = {"v1": 1, "v2": -1, "v1.1": -2, "v2.1": 2}
    g = induce(tree, f)
    assert g == {"v1.1": -2, "v1": -1, "v2.1": 2, "v2": 1, "v0": 0}


def test_induce_requires_total_labeling():
    tree = build_tree(parse_spec("RT(1,1)"))
    with pytest.raises(DomainMismatch) as exc:
        induce(tree, {"v1": 1, "v2": -1, "v1.1": -2})
    assert "v2.1" in exc.value.missing
    with pytest.raises(DomainMismatch) as exc:
        induce(tree, {"v1": 1, "v2": -1, "v1.1": -2, "v2.1": 2, "v9": 3})
    assert "v9" in exc.value.extra


@pytest.mark.parametrize("name", sorted(p.name for p in GOLDEN_DIR.glob("*.json")))
def test_golden_files_verify(name):
    _, tree, f = golden(name)
    report = verify(tree, f)
    assert report.is_seg, [v.describe() for v in report.violations]


def test_verify_flags_wrong_multiset():
    _, tree, f = golden("RT_0x3_2_4.json")
    f = dict(f)
    f["v1"] = 5  # duplicates an existing label, drops 1
    report = verify(tree, f)
    assert not report.is_seg
    kinds = {v.kind for v in report.violations}
    assert "EdgeLabelsNotTargetSet" in kinds


def test_verify_flags_bad_vertex_sums():
    # swap two leaf labels between different vertices: edge set intact,
    # induced labels break
    _, tree, f = golden("RT_0x3_3_5.json")
    f = dict(f)
    f["v4.1"], f["v5.1"] = f["v5.1"], f["v4.1"]
    report = verify(tree, f)
    assert not report.is_seg
    kinds = {v.kind for v in report.violations}
    assert kinds == {"VertexLabelsNotTargetSet"}


def test_verify_reports_domain_mismatch_as_violation():
    _, tree, f = golden("RT_0x3_2_4.json")
    f = dict(f)
    del f["v1"]
    report = verify(tree, f)
    assert not report.is_seg
    assert any(v.kind == "DomainMismatch" for v in report.violations)


def test_negate_involution_and_seg_preserving():
    _, tree, f = golden("RT_0x4_2_6.json")
    g = negate(f)
    assert negate(g) == f
    assert set(g) == set(f)
    assert verify(tree, g).is_seg


def test_write_read_round_trip(tmp_path):
    spec, tree, f = golden("RT_0_2_3x2_5.json")
    text = write_labeling(tree, f)
    spec2, f2 = read_labeling(text)
    assert spec2 == spec
    assert f2 == f
    # and the serialized edge order follows the tree
    data = json.loads(text)
    assert list(data["edges"]) == list(tree.edge_ids)


def test_write_rejects_partial_labeling():
    tree = build_tree(parse_spec("RT(1,1)"))
    with pytest.raises(DomainMismatch):
        write_labeling(tree, {"v1": 1})


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"edges": {"v1": 1}}',
        '{"spec": "RT(1,1)"}',
        '{"spec": "RT(1,1)", "edges": {"v1": "x"}}',
        '{"spec": "RT(1,1)", "edges": {"v1": true}}',
        '{"spec": "RT(1,1)", "edges": [1, 2]}',
    ],
)
def test_read_rejects_malformed(text):
    with pytest.raises(LabelingFormatError):
        read_labeling(text)


def test_dot_unlabeled_structure():
    tree = build_tree(parse_spec("RT(1,1)"))
    dot = to_dot(tree)
    assert dot.startswith("graph segtree {")
    assert '"v0" -- "v1";' in dot
    assert '"v2" -- "v2.1";' in dot
    assert parse_dot_spec(dot) == parse_spec("RT(1^2)")


def test_dot_labeled_shows_induced_labels():
    spec, tree, f = golden("RT_0x4_2_6.json")
    dot = to_dot(tree, f)
    assert '"v0" [label="0"];' in dot  # root induced label in the golden data
    assert f'[label="{f["v6.6"]}"]' in dot
    assert parse_dot_spec(dot) == spec


def test_dot_deterministic():
    spec, tree, f = golden("RT_2_3x2_5.json")
    assert to_dot(tree, f) == to_dot(tree, f)
