import pytest

from crystalpoly.rootdata import cartan_matrix
from crystalpoly.zcrystal import IotaSequence
from crystalpoly.forms import LinearForm, FormSet, closure, xi_form
from crystalpoly.tables import (
    UnsupportedTableError, table_rows, phi_form, c_substitution, binf_table,
    admissible_patterns, spin_form, d_spin_form, chain_family,
    xi_first_tables,
)
from crystalpoly import _tabledata


def iota_for(tl, n):
    return IotaSequence(cartan_matrix(tl, n))


def binf_closure(tl, n, rows=None):
    iota = iota_for(tl, n)
    rows = table_rows(tl, n) if rows is None else rows
    gens = [LinearForm(n, {(j, 1): 1}) for j in range(1, rows + 1)]
    return set(closure(iota, gens, "S"))


def node_closure(tl, n, i):
    iota = iota_for(tl, n)
    return set(closure(iota, [xi_form(iota, i)], "S"))


def test_table_rows():
    assert table_rows("A", 3) == 3
    assert table_rows("B", 4) == 4
    assert table_rows("C", 2) == 2
    assert table_rows("D", 5) == 4
    assert table_rows("F", 4) == 6
    assert table_rows("E", 6) == 8
    assert table_rows("E", 7) == 9
    assert table_rows("E", 8) == 15


def test_phi_form_a2_staircase():
    # row j sweeps x_{j;1} -> x_{j;1}-x_{j+1;0}=x_{j;1} ... -x_{j+1;n}
    got = [phi_form("A", 2, 1, k) for k in range(3)]
    assert got == [
        LinearForm(2, {(1, 1): 1}),
        LinearForm(2, {(1, 2): 1, (2, 1): -1}),
        LinearForm(2, {(2, 2): -1}),
    ]
    with pytest.raises(ValueError):
        phi_form("A", 2, 1, 3)


def test_phi_form_b2_staircase():
    got = [phi_form("B", 2, 1, k) for k in range(4)]
    assert got == [
        LinearForm(2, {(1, 1): 1}),
        LinearForm(2, {(1, 2): 1, (2, 1): -1}),
        LinearForm(2, {(2, 1): 1, (2, 2): -1}),
        LinearForm(2, {(3, 1): -1}),
    ]


def test_phi_form_c2_doubles_long_column():
    assert phi_form("C", 2, 1, 1) == LinearForm(2, {(1, 2): 2, (2, 1): -1})
    assert phi_form("C", 2, 1, 2) == LinearForm(2, {(2, 1): 1, (2, 2): -2})


def test_phi_form_d4_fork_cases():
    n = 4
    assert phi_form("D", n, 1, n - 2) == \
        LinearForm(n, {(1, 3): 1, (1, 4): 1, (2, 2): -1})
    assert phi_form("D", n, 1, n - 1) == LinearForm(n, {(1, 4): 1, (2, 3): -1})
    assert phi_form("D", n, 1, n - 1, primed=True) == \
        LinearForm(n, {(1, 3): 1, (2, 4): -1})
    assert phi_form("D", n, 1, n) == \
        LinearForm(n, {(2, 2): 1, (2, 3): -1, (2, 4): -1})
    assert phi_form("D", n, 1, 2 * n - 2) == LinearForm(n, {(4, 1): -1})


@pytest.mark.parametrize("tl,n", [
    ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4), ("D", 4), ("D", 5),
])
def test_staircase_family_matches_closure_of_one_row(tl, n):
    iota = iota_for(tl, n)
    fam = set(closure(iota, [LinearForm(n, {(1, 1): 1})], "S"))
    if tl == "A":
        table = {phi_form(tl, n, 1, k) for k in range(n + 1)}
    elif tl in ("B", "C"):
        table = {phi_form(tl, n, 1, k) for k in range(2 * n)}
    else:
        table = {phi_form(tl, n, 1, k) for k in range(2 * n - 1)}
        table.add(phi_form(tl, n, 1, n - 1, primed=True))
    assert fam == table


@pytest.mark.parametrize("tl,n", [
    ("A", 3), ("B", 3), ("C", 3), ("F", 4), ("E", 6), ("E", 7),
])
def test_binf_table_matches_closure_of_all_rows(tl, n):
    assert set(binf_table(tl, n)) == binf_closure(tl, n)


@pytest.mark.parametrize("n", [4, 5])
def test_d_binf_table_splits_into_closure_plus_bare(n):
    full = set(binf_table("D", n))
    fam = set(binf_table("D", n, families_only=True))
    assert fam == binf_closure("D", n)
    bare = {LinearForm(n, {(j, c): 1})
            for j in range(1, table_rows("D", n) + 1) for c in (n - 1, n)}
    assert full == fam | bare


@pytest.mark.parametrize("n", [2, 3, 4])
def test_c_table_is_b_table_with_doubled_short_column(n):
    got = {c_substitution(f, n) for f in binf_table("B", n)}
    assert got == set(binf_table("C", n))


def test_admissible_patterns():
    assert admissible_patterns("B", 2) == ((1,), (2,), (2, 1))
    assert admissible_patterns("D", 4) == \
        ((1,), (2,), (2, 1), (3,), (3, 1), (3, 2), (3, 2, 1))
    for tl, n, top in (("B", 5, 5), ("C", 4, 4), ("D", 6, 5)):
        pats = admissible_patterns(tl, n)
        assert len(pats) == 2 ** top - 1
        assert all(all(a > b for a, b in zip(mu, mu[1:])) for mu in pats)
        assert all(mu[0] <= top for mu in pats)
    with pytest.raises(UnsupportedTableError):
        admissible_patterns("A", 3)


def test_spin_form_b3_examples():
    assert spin_form("B", 3, (1,)) == \
        LinearForm(3, {(1, 2): 2, (1, 3): -1})
    assert spin_form("B", 3, (3, 1)) == \
        LinearForm(3, {(2, 2): 2, (2, 3): -1, (3, 1): -2})
    # consecutive pattern entries stack in one row and telescope
    assert spin_form("B", 3, (3, 2, 1)) == LinearForm(3, {(3, 3): -1})
    assert spin_form("C", 3, (1,)) == LinearForm(3, {(1, 2): 1, (1, 3): -1})
    with pytest.raises(ValueError):
        spin_form("B", 3, (1, 2))
    with pytest.raises(UnsupportedTableError):
        spin_form("D", 4, (1,))


@pytest.mark.parametrize("tl,n", [
    ("B", 2), ("B", 3), ("B", 4), ("B", 5),
    ("C", 2), ("C", 3), ("C", 4), ("C", 5),
])
def test_spin_family_matches_closure(tl, n):
    table = {spin_form(tl, n, mu) for mu in admissible_patterns(tl, n)}
    assert table == node_closure(tl, n, n)
    assert len(table) == 2 ** n - 1


@pytest.mark.parametrize("n", [4, 5])
def test_d_spin_families_match_closure(n):
    pats = admissible_patterns("D", n)
    plain = {d_spin_form(n, mu, primed=False) for mu in pats}
    primed = {d_spin_form(n, mu, primed=True) for mu in pats}
    assert plain == node_closure("D", n, n - 1)
    assert primed == node_closure("D", n, n)
    assert plain != primed


def test_chain_family():
    assert chain_family(3, 2) == [
        LinearForm(3, {(1, 1): 1, (1, 2): -1}),
        LinearForm(3, {(2, 1): -1}),
    ]


@pytest.mark.parametrize("tl,n", [
    ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4),
    ("F", 4), ("E", 6),
])
def test_xi_first_tables_match_closures(tl, n):
    fams = xi_first_tables(tl, n)
    assert sorted(fams) == list(range(1, n + 1))
    for i, fam in fams.items():
        assert set(fam) == node_closure(tl, n, i), (tl, n, i)


def test_xi_first_tables_sizes_f4_e6():
    assert {i: len(f) for i, f in xi_first_tables("F", 4).items()} == \
        {1: 1, 2: 2, 3: 24, 4: 25}
    assert {i: len(f) for i, f in xi_first_tables("E", 6).items()} == \
        {1: 1, 2: 2, 3: 3, 4: 25, 5: 26, 6: 77}


def test_unsupported_tables_point_at_closure_fallback():
    for call in (lambda: binf_table("G", 2),
                 lambda: xi_first_tables("E", 7),
                 lambda: xi_first_tables("G", 2)):
        with pytest.raises(UnsupportedTableError) as err:
            call()
        assert "closure" in str(err.value)
    with pytest.raises(UnsupportedTableError):
        phi_form("E", 6, 1, 0)


def test_tabledata_parser():
    assert _tabledata._parse("2x(3;1) - x(4;2)", False) == \
        ({(3, 1): 2, (4, 2): -1},)
    assert _tabledata._parse("x(j;1)\nx(j+2;4) - 2x(j;3)", True) == \
        ({(0, 1): 1}, {(2, 4): 1, (0, 3): -2})
    with pytest.raises(ValueError):
        _tabledata._parse("x(j;1) + garbage", True)
    with pytest.raises(ValueError):
        _tabledata._parse("x(j;1)\n+ -\nx(j;2)", True)


def test_tabledata_sizes():
    assert {k: len(v) for k, v in _tabledata.BINF_PARAMETRIC.items()} == {
        ("F", 4): 26, ("E", 6): 27, ("E", 7): 56, ("E", 8): 248}
