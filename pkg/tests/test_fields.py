from itertools import product

import numpy as np
import pytest

from qtweave import ParameterError, field_create, field_from_order


def test_rejects_non_prime_characteristic():
    with pytest.raises(ParameterError):
        field_create(4)
    with pytest.raises(ParameterError):
        field_create(1)


def test_rejects_bad_extension_degree():
    with pytest.raises(ParameterError):
        field_create(2, 0)


def test_order_limit():
    with pytest.raises(ParameterError):
        field_create(2, 11)  # 2048 > default limit
    assert field_create(2, 11, limit=4096).q == 2048


def test_field_from_order():
    f = field_from_order(8)
    assert (f.p, f.e, f.q) == (2, 3, 8)
    assert field_from_order(7).e == 1
    with pytest.raises(ParameterError):
        field_from_order(6)
    with pytest.raises(ParameterError):
        field_from_order(1)


def test_gf3_basics(gf3):
    assert gf3.inv(2) == 2  # 2 * 2 = 4 = 1 (mod 3)
    assert gf3.neg(1) == 2
    assert gf3.add(2, 2) == 1
    assert gf3.sub(0, 1) == 2


def test_gf4_modulus_is_the_unique_irreducible_quadratic(gf2, gf4):
    # oracle: a quadratic over GF(2) is irreducible iff it has no root
    irreducible = []
    for c0, c1 in product(range(2), repeat=2):
        has_root = any((a * a + c1 * a + c0) % 2 == 0 for a in range(2))
        if not has_root:
            irreducible.append((c0, c1, 1))
    assert irreducible == [(1, 1, 1)]
    assert gf4.modulus == (1, 1, 1)


def test_gf4_generator_square(gf4):
    # x * x reduced by x^2 + x + 1 is x + 1, encoded 3
    g = gf4.exp_table[1]
    assert g == 2
    assert gf4.mul(g, g) == 3


def test_exp_table_invariants():
    for (p, e) in [(2, 2), (2, 3), (3, 2), (5, 2)]:
        f = field_create(p, e)
        assert len(f.exp_table) == f.q - 1
        assert sorted(f.exp_table) == list(range(1, f.q))
        assert f.element_order(f.exp_table[1]) == f.q - 1


def test_element_order_direct_powering(gf5):
    # oracle: successive powers of 2 mod 5 are 2, 4, 3, 1
    powers = []
    acc = 1
    for _ in range(4):
        acc = (acc * 2) % 5
        powers.append(acc)
    assert powers == [2, 4, 3, 1]
    assert gf5.element_order(2) == 4


def test_element_order_small_cases(gf2, gf3):
    assert gf3.element_order(2) == 2
    assert gf2.element_order(1) == 1
    with pytest.raises(ParameterError):
        gf3.element_order(0)


def test_order_divides_group_order():
    for pe in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (2, 4)]:
        f = field_create(*pe)
        for a in f.nonzero():
            assert (f.q - 1) % f.element_order(a) == 0


def test_primitive_element(gf2, gf3, gf5):
    assert gf2.primitive_element() == 1
    assert gf3.primitive_element() == 2
    assert gf5.primitive_element() == 2


def test_rebuild_is_deterministic():
    a = field_create(3, 2)
    b = field_create(3, 2)
    assert a.modulus == b.modulus
    assert a.exp_table == b.exp_table
    assert a.primitive_element() == b.primitive_element()


def test_canonical_gf9_modulus():
    # x^2 + 1 comes first lexicographically but x has order 4 there, so the
    # canonical primitive modulus is x^2 + x + 2
    assert field_create(3, 2).modulus == (2, 1, 1)


@pytest.mark.parametrize("pe", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1),
                                    (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (7, 2), (2, 6)])
def test_field_axioms_exhaustive(pe):
    f = field_create(*pe)
    q = f.q
    add = np.array([[f.add(a, b) for b in range(q)] for a in range(q)])
    mul = np.array([[f.mul(a, b) for b in range(q)] for a in range(q)])
    a = np.arange(q)
    x, y, z = a[:, None, None], a[None, :, None], a[None, None, :]
    assert np.array_equal(add[add[x, y], z], add[x, add[y, z]])
    assert np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]])
    assert np.array_equal(add, add.T)
    assert np.array_equal(mul, mul.T)
    assert np.array_equal(mul[x, add[y, z]], add[mul[x, y], mul[x, z]])
    for v in f.nonzero():
        assert f.mul(v, f.inv(v)) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_pow(gf3, gf4):
    assert gf3.pow(2, 0) == 1
    assert gf3.pow(2, 5) == 2
    assert gf3.pow(2, -1) == 2
    assert gf4.pow(2, 3) == 1
    assert gf4.pow(0, 3) == 0
    with pytest.raises(ZeroDivisionError):
        gf4.pow(0, -1)


def test_check_rejects_foreign_values(gf3):
    with pytest.raises(ParameterError):
        gf3.check(3)
    with pytest.raises(ParameterError):
        gf3.check(-1)
