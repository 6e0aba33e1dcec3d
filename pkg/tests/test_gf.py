import pytest

from pgchroma.errors import DivisionByZero, UnsupportedOrder
from pgchroma.gf import SUPPORTED_ORDERS, build_field


def test_gf2_identities():
    f = build_field(2)
    assert f.add(1, 1) == 0
    assert f.mul(1, 1) == 1
    assert f.inv(1) == 1


def test_gf4_polynomial_reduction():
    # x * x = x + 1 modulo x^2 + x + 1, i.e. code 2 * code 2 = code 3
    f = build_field(4)
    assert f.mul(2, 2) == 3
    assert f.mul(2, 3) == 1
    assert f.inv(2) == 3 and f.inv(3) == 2


def test_gf5_mul():
    f = build_field(5)
    assert f.mul(3, 4) == 2  # 12 mod 5


def test_gf9_x_squared_is_minus_one():
    # modulus x^2 + 1: code(x) = 3, x*x = -1 = 2 mod 3
    f = build_field(9)
    assert f.mul(3, 3) == 2


def test_gf8_x_cubed():
    # modulus x^3 + x + 1: x^3 = x + 1, codes: 2^3 -> 3
    f = build_field(8)
    assert f.mul(f.mul(2, 2), 2) == 3


def test_unsupported_orders():
    for q in (6, 10, 11, 16, 1, 0):
        with pytest.raises(UnsupportedOrder):
            build_field(q)


def test_inv_zero_raises():
    with pytest.raises(DivisionByZero):
        build_field(5).inv(0)


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_field_axioms_exhaustive(q):
    f = build_field(q)
    els = range(q)
    for a in els:
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_inverse_involution_and_group_order(q):
    f = build_field(q)
    for a in range(1, q):
        assert f.inv(f.inv(a)) == a
        assert f.mul(a, f.inv(a)) == 1
        # multiplicative order divides q - 1
        x, order = a, 1
        while x != 1:
            x = f.mul(x, a)
            order += 1
        assert (q - 1) % order == 0


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_sub_and_neg(q):
    f = build_field(q)
    for a in range(q):
        assert f.add(a, f.neg(a)) == 0
        for b in range(q):
            assert f.add(f.sub(a, b), b) == a
