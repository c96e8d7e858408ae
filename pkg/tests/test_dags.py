import pytest

from fnomial.dags import dag_count, dag_count_via_inverse, dag_table
from fnomial.inversion import inverse_corner


def test_dag_count_examples():
    assert dag_count(2, 3) == 25
    assert dag_count(2, 6) == 3781503
    assert dag_count(1, 5) == 1
    # 3^2 multiplicity pairs on two nodes, 4 of them have both directions
    assert dag_count(3, 2) == 6 * 1 - 1 * 1 == 9 - 4


def test_via_inverse_examples():
    assert dag_count_via_inverse(2, 4) == 543
    assert dag_count_via_inverse(2, 0) == 1
    assert dag_count_via_inverse(2, 5) == -(-29281)


def test_tables(inverse_alpha2):
    assert dag_table(2, 6).counts == tuple(abs(r[0]) for r in inverse_alpha2)
    assert list(dag_table(1, 4)) == [1, 1, 1, 1, 1]
    t = dag_table(3, 3)
    assert t.counts == (1, 1, 5, 27 * 5 - 27 * 1 + 1)
    assert len(t) == 4


@pytest.mark.parametrize("alpha", range(1, 5))
def test_theorem_identity(alpha):
    for n in range(16):
        a = dag_count(alpha, n)
        assert a > 0
        assert a == (-1) ** n * inverse_corner(alpha, n) == dag_count_via_inverse(alpha, n)


def test_rejects_alpha_zero():
    with pytest.raises(ValueError):
        dag_count(0, 3)
    with pytest.raises(ValueError):
        dag_count_via_inverse(0, 3)


def test_large_n_exact():
    # exact big integers, no overflow
    a = dag_count(2, 60)
    assert a == dag_count_via_inverse(2, 60)
    assert a.bit_length() > 64 * 10
