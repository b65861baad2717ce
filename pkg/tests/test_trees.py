"""Tree grammar, validation, statistics and enumeration."""

from math import factorial

import pytest

import qstirling as q
import sweeps

FIGURE_TREE = "0(2,7(7(4)),5(5(6,3(3)),5(1)))"


def _leaf(label):
    return (label, ())


def test_parse_render_round_trip():
    for text in ["0", "0(1)", "0(1(1))", "0(2(2),1)", FIGURE_TREE]:
        t = q.parse_tree(text)
        assert q.render_tree(t) == text


def test_parse_shapes():
    assert q.parse_tree("0") == (0, ())
    assert q.parse_tree("0(1)") == (0, ((1, ()),))
    assert q.parse_tree("0(2(2),1)") == (0, ((2, ((2, ()),)), (1, ())))
    assert q.parse_tree("10(12)") == (10, ((12, ()),))


@pytest.mark.parametrize(
    "bad",
    ["", "0(", "0)", "0(1", "0(1))", "0(1),1", "0(01)", "0(,1)", "0()", "x", "0(1)x"],
)
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        q.parse_tree(bad)


def test_iter_vertices_depths():
    t = q.parse_tree("0(2(2),1)")
    seen = [(node[0], depth) for node, depth in q.iter_vertices(t)]
    assert (0, 0) in seen
    assert (2, 1) in seen
    assert (2, 2) in seen
    assert (1, 1) in seen
    assert len(seen) == 4


def test_infer_spec():
    assert q.infer_spec(q.parse_tree("0(2(2),1)")).mult == (1, 2)
    assert q.infer_spec(q.parse_tree(FIGURE_TREE)).mult == (1, 1, 2, 1, 3, 1, 2)
    assert q.infer_spec((0, ())).mult == ()
    with pytest.raises(ValueError):
        q.infer_spec(q.parse_tree("1(1)"))  # root must be 0
    with pytest.raises(ValueError):
        q.infer_spec(q.parse_tree("0(3(3))"))  # labels must be contiguous


def test_tree_violation_cases():
    spec = q.MultisetSpec((2, 2))
    good = q.parse_tree("0(1(1),2(2))")
    assert q.tree_violation(good, spec) is None
    assert q.validate_tree(good, spec)
    # wrong child label under an odd vertex
    assert q.tree_violation(q.parse_tree("0(1(2),2(1))"), spec) is not None
    # value split over two odd vertices
    assert q.tree_violation(q.parse_tree("0(1(1),1(1))"), q.MultisetSpec((4,))) is not None
    # wrong child count for the multiplicity
    assert q.tree_violation(q.parse_tree("0(1,2(2))"), spec) is not None
    # label counts disagree with the multiset
    assert q.tree_violation(q.parse_tree("0(1(1))"), spec) is not None
    # root label
    assert q.tree_violation((1, ()), spec) is not None
    assert not q.validate_tree(q.parse_tree("0(1(2),2(1))"), spec)


def test_validate_bare_root():
    assert q.validate_tree((0, ()), q.MultisetSpec(()))
    assert not q.validate_tree((0, ()), q.MultisetSpec((1,)))


def test_tree_stats_figure():
    ts = q.tree_stats(q.parse_tree(FIGURE_TREE))
    assert ts == q.TreeStats(cdes=5, casc=6, eleaf=1, first=2, last=5)


def test_tree_stats_small():
    ts = q.tree_stats(q.parse_tree("0(1)"))
    assert (ts.cdes, ts.casc, ts.eleaf, ts.first, ts.last) == (1, 1, 0, 1, 1)
    ts = q.tree_stats(q.parse_tree("0(1(1))"))
    assert (ts.cdes, ts.casc, ts.eleaf) == (1, 1, 1)
    # matches the word statistics through the correspondence
    ts = q.tree_stats(q.parse_tree("0(2(2),1)"))
    st = q.stats((2, 2, 1))
    assert (ts.cdes, ts.casc, ts.eleaf) == (st.des, st.asc, st.plat)


def test_tree_stats_bare_root_raises():
    with pytest.raises(ValueError):
        q.tree_stats((0, ()))


def test_enumerate_trees_counts_and_validity():
    for mult in sweeps.all_mults(6):
        spec = q.MultisetSpec(mult)
        rendered = []
        for t in q.enumerate_trees(spec):
            assert q.tree_violation(t, spec) is None
            rendered.append(q.render_tree(t))
        assert all(a < b for a, b in zip(rendered, rendered[1:]))
        assert len(rendered) == factorial(spec.K) // factorial(spec.K - spec.n + 1)


def test_enumerate_trees_small_families():
    assert [q.render_tree(t) for t in q.enumerate_trees(q.MultisetSpec((1,)))] == ["0(1)"]
    assert [q.render_tree(t) for t in q.enumerate_trees(q.MultisetSpec((2,)))] == [
        "0(1(1))"
    ]
    # values with multiplicity 1 are leaves, so both must hang off the root
    two = [q.render_tree(t) for t in q.enumerate_trees(q.MultisetSpec((1, 1)))]
    assert two == ["0(1,2)", "0(2,1)"]
    three = [q.render_tree(t) for t in q.enumerate_trees(q.MultisetSpec((1, 2)))]
    assert three == ["0(1,2(2))", "0(2(2(1)))", "0(2(2),1)"]


def test_enumerate_trees_empty_spec():
    assert list(q.enumerate_trees(q.MultisetSpec(()))) == [(0, ())]
