"""Smoke tests for the compiled python module."""

import pytest

bk = pytest.importorskip("brieskorn")


def test_milnor_and_connectivity():
    assert bk.milnor_number([2, 2, 2]) == 1
    assert bk.milnor_number([5, 3, 2]) == 8
    assert bk.milnor_number([7, 2, 2, 2]) == 6
    assert bk.link_connectivity([3, 2, 2, 2]) == 1


def test_spectrum_and_polynomial():
    assert bk.monodromy_spectrum([3, 2]) == [((1, 6), 1), ((5, 6), 1)]
    assert bk.characteristic_polynomial([3, 2]) == [1, -1, 1]
    assert bk.characteristic_factorization([2, 3, 5]) == [(30, 1)]
    assert bk.alexander_torus_knot(2, 3) == [1, -1, 1]
    # fibered-knot equality, small slice
    for p, q in [(2, 3), (2, 5), (3, 4), (3, 5)]:
        assert bk.alexander_torus_knot(p, q) == bk.characteristic_polynomial([p, q])


def test_signature_and_classes():
    assert bk.signature([5, 3, 2]) == -8
    parts = bk.signature_parts([5, 3, 2])
    assert (parts["positive"], parts["negative"], parts["zero"]) == (0, 8, 0)
    assert bk.sphere_class([3, 2, 2, 2, 2, 2])["kind"] == "kervaire_sphere"
    assert bk.sphere_class([7, 2, 2, 2])["kind"] == "standard_sphere"
    bp = bk.sphere_class([5, 3, 2, 2, 2])
    assert bp["kind"] == "bp_class"
    assert bp["bp_multiple"] == 1
    assert bp["bp_mod_28"] == 1
    assert bk.is_homotopy_sphere([3, 2, 2, 2])
    assert not bk.is_homotopy_sphere([6, 3, 2, 2])


def test_triple_block():
    assert bk.is_homology_3_sphere([2, 3, 5])
    assert not bk.is_homology_3_sphere([2, 2, 3])
    assert bk.casson_invariant([2, 3, 5]) == -1
    geo = bk.geometry_type([7, 3, 2])
    assert geo["kind"] == "sl2_tilde"
    assert geo["reciprocal_sum"] == (41, 42)


def test_enumeration_paths_agree():
    direct = bk.monodromy_spectrum([7, 5, 3, 2], path="direct", workers=4)
    conv = bk.monodromy_spectrum([7, 5, 3, 2], path="convolution")
    assert direct == conv
    with pytest.raises(bk.BudgetError):
        bk.monodromy_spectrum([9973, 9967], budget=1000)


def test_input_errors():
    with pytest.raises(ValueError):
        bk.milnor_number([2])
    with pytest.raises(ValueError):
        bk.milnor_number([1, 2])
    with pytest.raises(ValueError):
        bk.casson_invariant([2, 2, 3])


def test_curve_operations():
    assert bk.characteristic_pairs([(3, 2, 1, 1)]) == [(2, 3)]
    assert bk.characteristic_pairs([(3, 2, 1, 1), (7, 4, 1, 1)]) == [(2, 3), (2, 7)]
    assert bk.cable_presentation([(2, 3), (2, 7)]) == [(2, 3), (2, 13)]
    assert bk.branch_milnor_number([(2, 3), (2, 7)]) == 16
    delta = bk.alexander_for_pairs([(2, 3), (2, 7)])
    assert len(delta) - 1 == 16
    assert delta == delta[::-1]  # palindromic
    assert bk.intersection_multiplicity([(3, 2, 1, 1)], "y") == 3
    assert bk.intersection_multiplicity([(3, 2, 1, 1)], [(1, 0, 1)]) == 3
    with pytest.raises(ValueError):
        bk.intersection_multiplicity([(3, 2, 1, 1)], "y^2 - x^3")


def test_plumbing_operations():
    e8 = bk.named_graph("E8")
    m = bk.intersection_matrix(e8["vertices"], e8["edges"])
    assert bk.determinant(m) == 1
    assert bk.matrix_signature(m) == -8
    assert bk.is_negative_definite(m)
    hom = bk.boundary_homology(e8["vertices"], e8["edges"])
    assert hom["homology_sphere"]
    a4 = bk.named_graph("A4")
    assert bk.boundary_homology(a4["vertices"], a4["edges"])["cokernel"] == [5]
    assert bk.euler_characteristic_boundary(a4["vertices"], a4["edges"]) == 0
    snf = bk.smith_normal_form([[2, 0], [0, 3]])
    assert snf["invariant_factors"] == [1, 6]
