import pytest
from hypothesis import given, settings, strategies as st

from crystalpoly.rootdata import cartan_matrix, longest_word_length, weyl_dim
from crystalpoly.zcrystal import (
    IotaSequence, ZVector, generate_binf, generate_blambda,
)
from crystalpoly.forms import FormSet, LinearForm
from crystalpoly.tables import UnsupportedTableError, table_rows
from crystalpoly.polytope import (
    Polyhedron, RealizationError, VerifyReport, build, contains,
    crystal_graph, enumerate_binf_truncated, enumerate_blambda, verify,
)


def iota_for(t, n):
    return IotaSequence(cartan_matrix(t, n))


@pytest.mark.parametrize("t,n", [
    ("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4), ("D", 4), ("D", 5), ("G", 2),
    ("F", 4), ("E", 6), ("E", 7), ("E", 8),
])
def test_region_size_is_positive_root_count(t, n):
    cartan = cartan_matrix(t, n)
    poly = build(cartan, "binf", source="closure")
    assert len(poly.region) == longest_word_length(cartan)
    # the region never reaches beyond its recorded last row
    assert max(j for j, _ in poly.region) == poly.row_cutoff


@pytest.mark.parametrize("t,n", [
    ("A", 3), ("B", 4), ("C", 4), ("D", 5), ("F", 4), ("E", 6),
    ("E", 7), ("E", 8),
])
def test_row_cutoff_matches_closed_form_window(t, n):
    poly = build(cartan_matrix(t, n), "binf", source="closure")
    assert poly.row_cutoff == table_rows(t, n)


def test_membership_b2_examples():
    poly = build(cartan_matrix("B", 2), "binf")
    assert poly.contains(ZVector())
    assert poly.contains({})
    # x_{2;1} alone violates x_{1;2} - x_{2;1} >= 0
    assert not poly.contains({(2, 1): 1})
    assert poly.contains({(1, 2): 1, (2, 1): 1})
    # the system pins the coordinates to the nonnegative orthant
    assert not poly.contains({(1, 1): -1})
    assert not poly.contains(ZVector({(1, 2): 1, (2, 1): -1}))
    # support outside the live region
    assert not poly.contains({(3, 1): 1})
    assert contains(poly, {(1, 1): 5})


def test_membership_agrees_with_generated_set():
    cartan = cartan_matrix("C", 3)
    poly = build(cartan, "binf")
    pts = generate_binf(iota_for("C", 3), 4)
    assert all(poly.contains(x) for x in pts)
    # bumping any live cell of a crystal point stays in the lattice but
    # need not stay in the model; bumping a dead cell must leave it
    outside = ZVector({(poly.row_cutoff + 1, 1): 1})
    assert not poly.contains(outside)


@pytest.mark.parametrize("t,n,depth", [
    ("A", 1, 8), ("A", 2, 6), ("B", 2, 6), ("C", 3, 4), ("D", 4, 4),
    ("G", 2, 5),
])
def test_binf_enumeration_matches_operator_search(t, n, depth):
    cartan = cartan_matrix(t, n)
    poly = build(cartan, "binf")
    assert enumerate_binf_truncated(poly, depth) == \
        generate_binf(iota_for(t, n), depth)


def test_binf_enumeration_is_monotone_in_depth():
    poly = build(cartan_matrix("B", 2), "binf")
    sets = [enumerate_binf_truncated(poly, d) for d in range(6)]
    for small, big in zip(sets, sets[1:]):
        assert small <= big
    # each truncation is exactly a total-degree slice of the next
    for d, small in enumerate(sets[:-1]):
        assert small == {x for x in sets[d + 1] if x.total() <= d}


@pytest.mark.parametrize("t,n,lam,dim", [
    ("A", 2, (1, 1), 8), ("B", 2, (1, 0), 5), ("B", 2, (0, 1), 4),
    ("B", 2, (1, 1), 16), ("C", 3, (1, 0, 0), 6), ("D", 4, (1, 0, 0, 0), 8),
    ("D", 4, (0, 1, 0, 0), 28), ("G", 2, (1, 0), 14),
])
def test_blambda_enumeration_matches_oracle_and_dimension(t, n, lam, dim):
    cartan = cartan_matrix(t, n)
    poly = build(cartan, "blambda", lam)
    got = enumerate_blambda(poly)
    assert got == generate_blambda(iota_for(t, n), lam)
    assert len(got) == dim == weyl_dim(cartan, lam)


def test_blambda_zero_weight_is_a_point():
    poly = build(cartan_matrix("B", 2), "blambda", (0, 0))
    assert enumerate_blambda(poly) == {ZVector()}


def test_blambda_rebinding_lambda():
    poly = build(cartan_matrix("B", 2), "blambda", (1, 0))
    assert len(enumerate_blambda(poly)) == 5
    assert len(enumerate_blambda(poly, (1, 1))) == 16
    assert poly.contains({(1, 1): 1})
    # at lambda = Lambda_2 the Lambda_1-string collapses
    assert not poly.contains({(1, 1): 1}, lam=(0, 1))


@pytest.mark.parametrize("t,n,lam", [
    ("B", 3, None), ("C", 3, None), ("D", 4, (1, 0, 0, 0)),
    ("F", 4, (0, 0, 0, 1)),
])
def test_sources_agree(t, n, lam):
    cartan = cartan_matrix(t, n)
    if lam is None:
        a = build(cartan, "binf", source="closure")
        b = build(cartan, "binf", source="table")
        assert set(a.forms) == set(b.forms)
        assert enumerate_binf_truncated(a, 3) == enumerate_binf_truncated(b, 3)
    else:
        a = build(cartan, "blambda", lam, source="closure")
        b = build(cartan, "blambda", lam, source="table")
        assert enumerate_blambda(a) == enumerate_blambda(b)


def test_table_source_unavailable():
    with pytest.raises(UnsupportedTableError):
        build(cartan_matrix("G", 2), "binf", source="table")
    with pytest.raises(UnsupportedTableError) as err:
        build(cartan_matrix("E", 7), "blambda", (1,) + (0,) * 6,
              source="table")
    assert "closure" in str(err.value)
    # E7 B(infinity) tables do exist
    assert len(build(cartan_matrix("E", 7), "binf", source="table").forms) \
        == 504


def test_build_argument_validation():
    cartan = cartan_matrix("A", 2)
    with pytest.raises(ValueError):
        build(cartan, "binf", lam=(1, 0))
    with pytest.raises(ValueError):
        build(cartan, "bsomething")
    with pytest.raises(ValueError):
        build(cartan, "binf", source="guess")
    with pytest.raises(ValueError):
        build(cartan, "blambda", (1, -1))
    with pytest.raises(ValueError):
        build(cartan, "blambda", (1, 0, 0))
    with pytest.raises(ValueError):
        enumerate_blambda(build(cartan, "binf"))
    with pytest.raises(ValueError):
        enumerate_binf_truncated(build(cartan, "blambda", (1, 0)), 3)


def test_enumeration_cap(monkeypatch):
    poly = build(cartan_matrix("B", 2), "blambda", (1, 1))
    monkeypatch.setenv("CRYSTALPOLY_ENUM_CAP", "3")
    with pytest.raises(RealizationError):
        enumerate_blambda(poly)


def test_crystal_graph_a1_string():
    nodes, edges = crystal_graph(cartan_matrix("A", 1), (2,))
    assert nodes == [ZVector(), ZVector({(1, 1): 1}), ZVector({(1, 1): 2})]
    assert edges == [
        (ZVector(), 1, ZVector({(1, 1): 1})),
        (ZVector({(1, 1): 1}), 1, ZVector({(1, 1): 2})),
    ]


def test_crystal_graph_counts():
    cartan = cartan_matrix("B", 2)
    nodes, edges = crystal_graph(cartan, (1, 1))
    assert len(nodes) == 16
    # every non-lowest node has at least one outgoing arrow; arrow targets
    # stay in the node set
    targets = {t for _, _, t in edges}
    assert targets <= set(nodes)
    assert edges == sorted(edges, key=lambda e: (sorted(e[0].entries.items()),
                                                 e[1]))


def test_verify_all_green():
    reports = verify(cartan_matrix("B", 2), lam=(1, 1), depth=4)
    names = [r.name for r in reports]
    assert "a:table-vs-closure" in names
    assert "b:binf-oracle" in names
    assert "c:blambda-oracle" in names
    assert "e:support-region" in names
    assert all(r.passed for r in reports)
    assert any(r.name == "f:crystal-axioms(blambda)" for r in reports)


def test_verify_skips_without_tables():
    reports = verify(cartan_matrix("G", 2), lam=(1, 0), depth=3)
    skipped = [r for r in reports if r.skipped]
    assert skipped and all("closure" in r.note for r in skipped)
    assert all(r.passed for r in reports)


def test_verify_catches_corrupted_table(monkeypatch):
    import crystalpoly.polytope as polytope_module
    real = polytope_module.binf_table

    def tampered(type_label, rank):
        forms = list(real(type_label, rank))
        broken = forms[0].minus(LinearForm(rank, {(1, 1): 1}), -1)
        return FormSet([broken] + forms[1:])

    monkeypatch.setattr(polytope_module, "binf_table", tampered)
    reports = verify(cartan_matrix("B", 2), depth=3)
    table_check = [r for r in reports if r.name == "a:table-vs-closure"][0]
    assert not table_check.passed
    assert table_check.witnesses


def test_verify_report_requires_witness_on_failure():
    with pytest.raises(AssertionError):
        VerifyReport("x", False)
    r = VerifyReport("x", False, witnesses=["w"])
    assert r.status() == "FAIL" and r.witnesses == ("w",)
    assert VerifyReport("y", True).status() == "PASS"
    assert VerifyReport("z", True, skipped=True).status() == "SKIP"


@settings(max_examples=25, deadline=None)
@given(st.tuples(st.integers(0, 2), st.integers(0, 2)))
def test_blambda_matches_oracle_for_random_weights(lam):
    cartan = cartan_matrix("B", 2)
    poly = build(cartan, "blambda", lam)
    got = enumerate_blambda(poly)
    assert got == generate_blambda(IotaSequence(cartan), lam)
    assert len(got) == weyl_dim(cartan, lam)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 5))
def test_binf_truncations_match_oracle_at_any_depth(depth):
    cartan = cartan_matrix("A", 2)
    poly = build(cartan, "binf")
    assert enumerate_binf_truncated(poly, depth) == \
        generate_binf(IotaSequence(cartan), depth)


def test_polyhedron_repr_mentions_shape():
    poly = build(cartan_matrix("B", 2), "blambda", (1, 0))
    text = repr(poly)
    assert "B2" in text and "blambda" in text and "lam" in text
