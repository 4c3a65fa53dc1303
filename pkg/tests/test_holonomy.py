"""Holonomy models: spin-3/2 decompositions, kernels, spheres, products."""

from fractions import Fraction

import pytest

from rslab.errors import ConsistencyError, InputError, NotApplicableError
from rslab.holonomy import (
    ParallelCounts,
    QKSummand,
    TopologicalInput,
    family_index,
    holonomy_model,
    hyperkahler_kernel_identity,
    kernel_dimension,
    product_parallel_from_models,
    product_parallel_rs,
    qk_casimir_bound,
    qk_kernel_analysis,
    sphere_check,
    spin7_betti_identity,
    symmetric_space_catalog,
)
from rslab.lie import weyl_dim

F = Fraction


def _summand_dims(model):
    sigma = model.sigma_three_half()
    return sorted(
        weyl_dim(model.system, w)
        for w, mult in sigma.total.sorted_terms()
        for _ in range(mult)
    )


def test_g2_decomposition():
    model = holonomy_model("g2")
    assert _summand_dims(model) == [7, 14, 27]
    sigma = model.sigma_three_half()
    assert not sigma.graded
    assert sigma.total.dimension == 48


def test_spin7_graded_decomposition():
    model = holonomy_model("spin7")
    sigma = model.sigma_three_half()
    assert sigma.graded
    plus = sorted(
        weyl_dim(model.system, w)
        for w, mult in sigma.plus.sorted_terms()
        for _ in range(mult)
    )
    minus = sorted(
        weyl_dim(model.system, w)
        for w, mult in sigma.minus.sorted_terms()
        for _ in range(mult)
    )
    assert plus == [8, 48]
    assert minus == [21, 35]


def test_su3_decomposition():
    assert _summand_dims(holonomy_model("su", 3)) == [3, 3, 3, 3, 6, 6, 8, 8]


def test_dimension_bookkeeping_everywhere():
    cases = (
        [("su", k) for k in range(2, 6)]
        + [("u", 3)]
        + [("sp", k) for k in range(1, 4)]
        + [("sp1sp", k) for k in range(2, 5)]
        + [("g2", None), ("spin7", None)]
        + [("so", k) for k in range(3, 9)]
    )
    for kind, parameter in cases:
        model = holonomy_model(kind, parameter)
        sigma = model.sigma_three_half()
        spinor_dim = 2 ** (model.real_dimension // 2)
        assert sigma.total.dimension == spinor_dim * (model.real_dimension - 1), kind
        if sigma.graded:
            assert sigma.plus.dimension + sigma.minus.dimension == sigma.total.dimension


def test_so_spin32_is_irreducible():
    for n in (7, 9):
        model = holonomy_model("so", n)
        terms = model.sigma_three_half().total.sorted_terms()
        assert len(terms) == 1 and terms[0][1] == 1


def test_parallel_counts():
    for n in range(1, 7):
        model = holonomy_model("sp", n)
        assert model.parallel_spinor_dimension() == n + 1
        assert model.parallel_rs_dimension() == n - 1
    for n in range(2, 9):
        model = holonomy_model("su", n)
        assert model.parallel_spinor_dimension() == 2
        assert model.parallel_rs_dimension() == 0
    assert holonomy_model("g2").parallel_rs_dimension() == 0
    assert holonomy_model("spin7").parallel_rs_dimension() == 0
    assert holonomy_model("sp1sp", 2).parallel_rs_dimension() == 1
    assert holonomy_model("sp1sp", 3).parallel_rs_dimension() == 0


def test_generic_kaehler_twist_kills_trivial_summands():
    model = holonomy_model("u", 3)
    assert model.parallel_spinor_dimension() == 0
    assert model.parallel_rs_dimension() == 0


def test_model_dispatch_validation():
    with pytest.raises(InputError):
        holonomy_model("f4")
    with pytest.raises(InputError):
        holonomy_model("g2", 2)
    with pytest.raises(InputError):
        holonomy_model("su")
    with pytest.raises(InputError):
        holonomy_model("sp1sp", 1)
    with pytest.raises(InputError):
        holonomy_model("so", 2)


def test_qk_bound_dimension_eight():
    report = qk_kernel_analysis(2)
    assert report.real_dimension == 8
    assert report.survivor_labels == (
        "Sym^0 H (x) Lambda^(0,0)_0 E",
        "Sym^0 H (x) Lambda^(1,1)_0 E",
    )
    assert report.curvature_allows_kernel
    assert report.kernel_formula == "b2 + 1"
    bounds = {entry.summand.label(): entry.bound for entry in report.entries}
    assert bounds["Sym^1 H (x) Lambda^(1,0)_0 E"] == F(3, 16)
    assert bounds["Sym^3 H (x) Lambda^(1,0)_0 E"] == F(1, 2)
    assert all(entry.bound >= 0 for entry in report.entries)
    # total dimension of the listed summands is the spin-3/2 rank
    assert sum(e.dimension for e in report.entries) == 16 * 7


def test_qk_bound_higher_dimensions_all_positive():
    for m in range(3, 7):
        report = qk_kernel_analysis(m)
        assert report.survivors == ()
        assert not report.curvature_allows_kernel
        assert report.kernel_formula is None
        assert all(entry.bound > 0 for entry in report.entries)


def test_qk_summand_parity_guard():
    with pytest.raises(InputError):
        QKSummand(1, 0, 0).validate(2)
    # degree m summands are fine
    QKSummand(2, 0, 0).validate(2)
    assert qk_casimir_bound(2, QKSummand(0, 1, 1)) == 0


def test_sphere_checks():
    for n in range(3, 21):
        chk = sphere_check(n)
        assert chk.casimir_value == F(n * (n + 7), 8)
        assert chk.margin == F(n * n - n + 4, 4)
        assert chk.margin > 0
        expected_kind = "B" if n % 2 else "D"
        assert chk.realization.startswith(expected_kind)
    with pytest.raises(InputError):
        sphere_check(2)


def test_topological_kernels():
    assert kernel_dimension(TopologicalInput("CY", n=2, hodge=(20,))) == 38
    assert kernel_dimension(TopologicalInput("CY", n=3, hodge=(1, 101))) == 202
    assert kernel_dimension(TopologicalInput("CY", n=4, hodge=(1, 0, 426))) == 852
    assert kernel_dimension(TopologicalInput("HK", n=1, hodge=(20,))) == 38
    assert (
        kernel_dimension(
            TopologicalInput("SPIN7", b2=4, b3=33, b4_minus=60)
        )
        == 97
    )
    assert kernel_dimension(TopologicalInput("G2", b2=0, b3=1)) == 0
    assert kernel_dimension(TopologicalInput("G2", b2=3, b3=17)) == 19
    assert kernel_dimension(TopologicalInput("QK", n=2, b2=1)) == 2


def test_topological_indexes():
    assert family_index(TopologicalInput("CY", n=2, hodge=(20,))) == -38
    assert family_index(TopologicalInput("CY", n=3, hodge=(1, 101))) == 0
    assert family_index(TopologicalInput("CY", n=4, hodge=(1, 0, 426))) == -852
    assert family_index(TopologicalInput("HK", n=1, hodge=(20,))) == -38
    assert (
        family_index(TopologicalInput("SPIN7", b2=4, b3=33, b4_minus=60))
        == 33 - 60 - 4
    )
    with pytest.raises(NotApplicableError):
        family_index(TopologicalInput("G2", b2=0, b3=1))
    with pytest.raises(NotApplicableError):
        family_index(TopologicalInput("QK", n=2, b2=1))


def test_topological_validation():
    with pytest.raises(InputError):
        TopologicalInput("CY", n=1, hodge=())
    with pytest.raises(InputError):
        TopologicalInput("CY", n=3, hodge=(20,))
    with pytest.raises(InputError):
        TopologicalInput("G2", b2=0, b3=0)
    with pytest.raises(InputError):
        TopologicalInput("QK", n=3, b2=1)
    with pytest.raises(InputError):
        TopologicalInput("NK", b2=1)
    with pytest.raises(ConsistencyError):
        kernel_dimension(TopologicalInput("CY", n=2, hodge=(0,)))


def test_hyperkahler_identities():
    for n in range(1, 7):
        identity = hyperkahler_kernel_identity(n)
        assert identity.consistent
        assert identity.parallel_count == n - 1


def _evaluate(form, values):
    total = form.constant
    for name, coeff in form.terms.items():
        total += coeff * values[name]
    return total


def test_hyperkahler_closed_forms_evaluate():
    identity = hyperkahler_kernel_identity(2)
    values = {"h11": 5, "h21": 7}
    assert _evaluate(identity.closed_kernel, values) == kernel_dimension(
        TopologicalInput("HK", n=2, hodge=(5, 7))
    )
    assert _evaluate(identity.closed_index, values) == family_index(
        TopologicalInput("HK", n=2, hodge=(5, 7))
    )


def test_hyperkahler_dim8_betti_corollary():
    # with b2 = h11 + 2 and b3 = 2 h21 the kernel is 4 b2 + b3 - 11
    identity = hyperkahler_kernel_identity(2)
    for b2, b3 in [(7, 14), (23, 0), (5, 36)]:
        values = {"h11": b2 - 2, "h21": b3 // 2}
        assert _evaluate(identity.closed_kernel, values) == 4 * b2 + b3 - 11


def test_spin7_betti_identity():
    identity = spin7_betti_identity()
    assert identity.consistent
    assert identity.kernel.terms == {"b2": 1, "b3": 1, "b4_minus": 1}
    assert identity.b4_plus.constant == 25
    assert identity.from_betti == identity.from_ahat_and_signature
    assert identity.from_betti == identity.from_ahat_and_euler


def test_symmetric_space_catalog():
    catalog = symmetric_space_catalog()
    by_name = {entry.name: entry for entry in catalog}
    assert set(by_name) == {"Gr2(C4)", "HP2", "G2/SO(4)", "SU(3)", "Q4"}
    assert by_name["Gr2(C4)"].kernel_dimension == 2
    assert by_name["HP2"].kernel_dimension == 1
    assert by_name["G2/SO(4)"].kernel_dimension == 1
    assert by_name["SU(3)"].kernel_dimension == 2
    assert by_name["Q4"].kernel_dimension == 2
    assert by_name["Gr2(C4)"].rs_index == -2
    assert by_name["Q4"].rs_index == -2
    assert all(entry.all_parallel for entry in catalog)


def test_product_parallel_counts():
    left = holonomy_model("sp", 2)
    report = product_parallel_from_models(left, left)
    assert report.count == 15
    assert report.proven

    k3_like = holonomy_model("su", 2)
    report = product_parallel_from_models(k3_like, k3_like)
    assert report.count == 4

    seven = holonomy_model("g2")
    report = product_parallel_from_models(seven, seven)
    assert report.count == 1
    assert not report.proven
    assert "even" in report.note


def test_product_parallel_unknown_dimension():
    report = product_parallel_rs(
        ParallelCounts(spinors=2, rs_fields=0),
        ParallelCounts(spinors=3, rs_fields=1, real_dimension=8),
    )
    assert report.count == 2 * 3 + 0 * 3 + 2 * 1
    assert not report.proven
