"""Root systems, Weyl dimensions, Casimirs, multiplicities, tensor products."""

from fractions import Fraction

import pytest

from rslab.errors import ConsistencyError, InputError
from rslab.lie import (
    RepSum,
    casimir,
    character_oracle,
    g2,
    irreducible,
    moment_convolution,
    product_system,
    tensor_decompose,
    type_a,
    type_b,
    type_c,
    type_d,
    weight_multiplicities,
    weyl_dim,
)

F = Fraction


def _w(*coords):
    return tuple(F(c) for c in coords)


def test_b2_half_sum():
    assert type_b(2).delta == _w(F(3, 2), F(1, 2))


def test_g2_dimensions():
    sys = g2()
    assert weyl_dim(sys, _w(0, -1, 1)) == 7
    assert weyl_dim(sys, _w(-1, -1, 2)) == 14
    assert weyl_dim(sys, _w(0, -2, 2)) == 27
    assert weyl_dim(sys, sys.trivial_weight()) == 1


def test_g2_vector_square():
    sys = g2()
    product = tensor_decompose(sys, _w(0, -1, 1), _w(0, -1, 1))
    dims = sorted(weyl_dim(sys, w) for w, m in product.sorted_terms() for _ in range(m))
    assert dims == [1, 7, 14, 27]


def test_so7_dimensions_and_products():
    sys = type_b(3)
    vector = _w(1, 0, 0)
    spinor = _w(F(1, 2), F(1, 2), F(1, 2))
    rs = _w(F(3, 2), F(1, 2), F(1, 2))
    assert weyl_dim(sys, vector) == 7
    assert weyl_dim(sys, spinor) == 8
    assert weyl_dim(sys, rs) == 48
    assert weyl_dim(sys, _w(1, 1, 0)) == 21
    assert weyl_dim(sys, _w(1, 1, 1)) == 35

    twisted = tensor_decompose(sys, vector, spinor)
    assert dict(twisted.sorted_terms()) == {spinor: 1, rs: 1}

    square = tensor_decompose(sys, spinor, spinor)
    assert dict(square.sorted_terms()) == {
        sys.trivial_weight(): 1,
        vector: 1,
        _w(1, 1, 0): 1,
        _w(1, 1, 1): 1,
    }


def test_casimir_values():
    assert casimir(type_b(3), _w(F(3, 2), F(1, 2), F(1, 2))) == F(49, 4)
    assert casimir(type_b(4), _w(F(3, 2), F(1, 2), F(1, 2), F(1, 2))) == 18
    assert casimir(type_d(4), _w(F(3, 2), F(1, 2), F(1, 2), F(1, 2))) == 15
    assert casimir(type_b(1), _w(F(3, 2))) == F(15, 4)
    assert casimir(type_d(2), _w(F(3, 2), F(1, 2))) == F(11, 2)


def test_type_a_center_invariance():
    sys = type_a(3)
    adjoint = _w(1, 0, -1)
    assert weyl_dim(sys, adjoint) == 8
    assert casimir(sys, adjoint) == 6
    # shifting by the central direction changes nothing
    assert casimir(sys, _w(2, 1, 0)) == 6
    assert weyl_dim(sys, _w(2, 1, 0)) == 8
    assert casimir(sys, _w(1, 0, 0)) == F(8, 3)


def test_weight_multiplicities_a1_adjoint():
    sys = type_a(2)
    mults = weight_multiplicities(sys, _w(1, -1))
    assert mults == {_w(1, -1): 1, _w(0, 0): 1, _w(-1, 1): 1}


def test_zero_weight_multiplicities():
    assert weight_multiplicities(type_a(3), _w(1, 0, -1))[_w(0, 0, 0)] == 2
    assert weight_multiplicities(g2(), _w(-1, -1, 2))[_w(0, 0, 0)] == 2
    assert weight_multiplicities(type_b(3), _w(1, 1, 0))[_w(0, 0, 0)] == 3


def test_multiplicities_sum_to_dimension():
    for sys, lam in [
        (type_b(3), _w(F(3, 2), F(1, 2), F(1, 2))),
        (type_c(2), _w(2, 1)),
        (g2(), _w(0, -2, 2)),
    ]:
        mults = weight_multiplicities(sys, lam)
        assert sum(mults.values()) == weyl_dim(sys, lam)


def test_sp4_products():
    sys = type_c(2)
    assert weyl_dim(sys, _w(1, 0)) == 4
    assert weyl_dim(sys, _w(1, 1)) == 5
    assert weyl_dim(sys, _w(2, 0)) == 10
    assert weyl_dim(sys, _w(2, 1)) == 16
    square = tensor_decompose(sys, _w(1, 0), _w(1, 0))
    assert dict(square.sorted_terms()) == {_w(2, 0): 1, _w(1, 1): 1, _w(0, 0): 1}
    mixed = tensor_decompose(sys, _w(1, 1), _w(1, 0))
    assert dict(mixed.sorted_terms()) == {_w(2, 1): 1, _w(1, 0): 1}


def test_product_system_factors():
    sys = product_system(type_c(1), type_c(2))
    assert weyl_dim(sys, _w(1, 1, 0)) == 8
    assert weyl_dim(sys, _w(2, 0, 0)) == 3
    assert casimir(sys, _w(1, 0, 0)) == casimir(type_c(1), _w(1))
    product = tensor_decompose(sys, _w(1, 0, 0), _w(0, 1, 0))
    assert dict(product.sorted_terms()) == {_w(1, 1, 0): 1}


def test_product_system_needs_two_factors():
    with pytest.raises(InputError):
        product_system(type_c(2))


def test_dominance_utilities():
    sys = type_b(1)
    dom, sign = sys.to_dominant(_w(F(-3, 2)))
    assert dom == _w(F(3, 2)) and sign == -1
    assert sys.to_dominant_strict(_w(0)) is None
    assert sys.to_dominant_strict(_w(-2)) == (_w(2), -1)


def test_nondominant_weight_rejected():
    with pytest.raises(InputError):
        weyl_dim(type_b(2), _w(F(1, 2), F(3, 2)))


def test_nonintegral_weight_rejected():
    with pytest.raises(InputError):
        weyl_dim(type_b(2), _w(1, F(1, 2)))


def test_repsum_arithmetic():
    sys = type_b(3)
    vector = irreducible(sys, _w(1, 0, 0))
    spinor = irreducible(sys, _w(F(1, 2), F(1, 2), F(1, 2)))
    both = vector.add(spinor)
    assert both.dimension == 15
    assert both.scale(3).dimension == 45
    back = both.subtract(spinor)
    assert dict(back.sorted_terms()) == dict(vector.sorted_terms())
    with pytest.raises(ConsistencyError):
        vector.subtract(spinor)
    virtual = vector.subtract(spinor, virtual=True)
    assert virtual.is_virtual()
    assert virtual.dimension == -1
    assert irreducible(sys, sys.trivial_weight()).trivial_multiplicity() == 1
    assert vector.trivial_multiplicity() == 0


def test_tensor_against_character_moments():
    sys = type_b(3)
    vector = _w(1, 0, 0)
    spinor = _w(F(1, 2), F(1, 2), F(1, 2))
    point = (F(1), F(2), F(3))
    product = tensor_decompose(sys, vector, spinor)
    lhs = character_oracle(sys, product, point)
    rhs = moment_convolution(
        character_oracle(sys, irreducible(sys, vector), point),
        character_oracle(sys, irreducible(sys, spinor), point),
    )
    assert lhs == rhs == (56, 0, 420, 0, 7644)


def test_scalar_factor_rejected():
    with pytest.raises(InputError):
        type_a(1)
    with pytest.raises(InputError):
        type_d(1)
