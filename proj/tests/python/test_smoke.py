import pytest

import grshull


@pytest.fixture(scope="module")
def q11():
    return grshull.validate_params(11, 5, 3, 4, 3)


def test_validate_params_derives_the_shape(q11):
    assert q11.q == 11
    assert q11.lambda_ == 5
    assert q11.tau == 3
    assert q11.rho == 4
    assert q11.sigma == 3
    assert q11.n == 45
    assert q11.kappa == 1
    assert q11.pi == 12
    assert q11.L == 4
    assert "q=11" in repr(q11)


def test_validate_params_rejects_bad_shapes():
    with pytest.raises(ValueError):
        grshull.validate_params(11, 5, 3, 4, 9)  # sigma above rho/kappa
    with pytest.raises(ValueError):
        grshull.validate_params(12, 5, 3, 4, 2)  # q not a prime power
    with pytest.raises(ValueError):
        grshull.validate_params(11, 5, 5, 4, 2)  # gcd(lambda, tau) != 1


def test_lattice_counting_matches_bruteforce():
    lat = grshull.Lattice(4, 5, 3)
    fp = grshull.first_point(lat)
    assert (fp.d1, fp.d2) == (3, 6)
    for k in range(0, 40):
        assert grshull.count_below(lat, k) == grshull.count_below_bruteforce(lat, k)
    assert grshull.count_below(lat, 9) == 1

    empty = grshull.Lattice(7, 4, 6)  # odd sum target, even differences
    assert grshull.count_below_bruteforce(empty, 60) == 0
    assert grshull.first_point(empty) is None


def test_hull_formula_agrees_with_gram_rank(q11):
    assert grshull.count_F(q11, 6) == 0
    assert grshull.count_F(q11, 9) == 2
    for k in range(1, 16):
        hd = grshull.hull_dim_formula(q11, k)
        oracle_hull, oracle_c = grshull.hull_dimension_oracle(q11, k)
        assert hd.exactness == grshull.Exactness.EXACT
        assert hd.c == oracle_c
        assert hd.hull_dim == oracle_hull
        assert len(grshull.failure_points_bruteforce(q11, k)) == grshull.count_F(
            q11, k
        )


def test_records_and_propagation(q11):
    r = grshull.make_record(q11, 9)
    assert (r.n, r.K, r.d, r.c) == (45, 29, 10, 2)
    assert r.mds == grshull.MdsStatus.EAQMDS
    assert repr(r) == "[[45,29,10;2]]_11"
    assert grshull.singleton_check(r).result == grshull.SingletonResult.TIGHT

    src = grshull.make_record(q11, 6)
    assert (src.K, src.c) == (33, 0)
    moved = grshull.propagate(src, 3, 3)
    assert (moved.n, moved.K, moved.d, moved.c) == (45, 33, 10, 6)
    with pytest.raises(ValueError):
        grshull.propagate(src, 7, 0)


def test_table_rows_and_csv(q11):
    rows = grshull.table_rows(q11, 8, 10)
    assert [row.k for row in rows] == [8, 9, 10]
    assert rows[0].hull.failure_count == rows[0].record.c
    assert grshull.rows_to_csv(rows) == (
        "k,n,K,d,c,exact,eaqmds\n"
        "8,45,31,9,2,true,true\n"
        "9,45,29,10,2,true,true\n"
        "10,45,29,11,4,true,true\n"
    )


def test_admissible_families():
    fams = grshull.admissible_families(11)
    shapes = {(p.lambda_, p.tau, p.rho, p.sigma) for p in fams}
    assert (5, 3, 4, 3) in shapes
    assert grshull.admissible_families(5) == []
    with pytest.raises(ValueError):
        grshull.admissible_families(6)
