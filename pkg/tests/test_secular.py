import numpy as np
import pytest

from secres import (
    EmptyList,
    MatrixModel,
    OrderMismatch,
    SeriesPolynomial,
    TruncatedSeries,
    characteristic_polynomial,
    eigenvalues_at,
    exact_eigenvalues_at,
    p_space_series,
    reconstruct,
    validate,
)

from oracles import poly_mul, truncate


def test_reconstruct_two_states_matches_hand_expansion(zheng3):
    poly = reconstruct(p_space_series(zheng3, 2))
    assert poly.degree == 2 and poly.order == 2
    perturbed = p_space_series(zheng3, 2)
    s_mid = perturbed[0].energy_series.coefficients
    s_low = perturbed[1].energy_series.coefficients
    # (W - a)(W - b) = W^2 - (a+b) W + ab, product truncated at the order
    p1_expected = [-(x + y) for x, y in zip(s_mid, s_low)]
    p2_expected = truncate(poly_mul(s_mid, s_low), 2)
    assert list(poly.coefficients[0].coefficients) == pytest.approx(
        p1_expected, abs=1e-15
    )
    assert list(poly.coefficients[1].coefficients) == pytest.approx(
        p2_expected, abs=1e-15
    )
    # and the frozen values: p1 = -(2.1 - (10/9) l^2), p2 = 1.1 - (19/9) l^2
    assert poly.coefficients[0].coefficients[0] == pytest.approx(-2.1, abs=1e-14)
    assert poly.coefficients[0].coefficients[2] == pytest.approx(10 / 9, abs=1e-13)
    assert poly.coefficients[1].coefficients[0] == pytest.approx(1.1, abs=1e-14)
    assert poly.coefficients[1].coefficients[2] == pytest.approx(-19 / 9, abs=1e-13)


def test_reconstruct_single_series():
    s = TruncatedSeries(2, (1.0, 0.0, -10.0))
    poly = reconstruct([s])
    assert poly.degree == 1
    assert poly.coefficients[0].coefficients == (-1.0, -0.0, 10.0)


def test_reconstruct_full_space_reproduces_exact_charpoly(zheng3):
    # reconstruction over ALL states at K=2 must equal the exact
    # characteristic polynomial, whose coefficients have lambda-degree <= 2
    full = validate(MatrixModel(3, zheng3.h0_diagonal, zheng3.interaction, (1, 2, 3)))
    poly = reconstruct(p_space_series(full, 2))
    cp = characteristic_polynomial(full)
    for series, exact in zip(poly.coefficients, cp.coefficients):
        got = list(series.coefficients)
        want = truncate(exact.coefficients, 2)
        assert got == pytest.approx(want, abs=1e-12)


def test_reconstruct_at_zero_coupling_gives_elementary_symmetric():
    from itertools import combinations

    from oracles import random_model_data

    rng = np.random.default_rng(37)
    h0, interaction = random_model_data(rng, 4)
    model = validate(MatrixModel(4, h0, interaction, (1, 3, 4)))
    poly = reconstruct(p_space_series(model, 3))
    energies = [h0[0], h0[2], h0[3]]
    for j, series in enumerate(poly.coefficients, start=1):
        elementary = sum(
            np.prod(combo) for combo in combinations(energies, j)
        )
        assert series.coefficients[0] == pytest.approx(
            (-1) ** j * elementary, rel=1e-13
        )


def test_reconstruct_is_symmetric_in_inputs(zheng3):
    states = p_space_series(zheng3, 6)
    forward = reconstruct(states)
    backward = reconstruct(states[::-1])
    assert forward == backward


def test_reconstruct_empty_raises():
    with pytest.raises(EmptyList):
        reconstruct([])


def test_reconstruct_mixed_orders_raises():
    with pytest.raises(OrderMismatch):
        reconstruct([TruncatedSeries.zero(2), TruncatedSeries.zero(3)])


def test_vieta_sum_of_roots(zheng3):
    poly = reconstruct(p_space_series(zheng3, 6))
    rng = np.random.default_rng(31)
    for _ in range(10):
        lam = complex(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3))
        roots = eigenvalues_at(poly, lam)
        total = sum(roots)
        expected = -poly.coefficients[0].evaluate(lam)
        assert abs(total - expected) <= 1e-12 * max(1.0, abs(expected))


def test_eigenvalues_at_zero(zheng3):
    poly = reconstruct(p_space_series(zheng3, 2))
    roots = eigenvalues_at(poly, 0.0)
    assert roots[0].real == pytest.approx(1.0, abs=1e-12)
    assert roots[1].real == pytest.approx(1.1, abs=1e-12)


def test_eigenvalues_at_real_coupling_track_exact(zheng3):
    cp = characteristic_polynomial(zheng3)
    exact = sorted(z.real for z in exact_eigenvalues_at(cp, 0.3))
    poly = reconstruct(p_space_series(zheng3, 6))
    effective = eigenvalues_at(poly, 0.3)
    for eff, ref in zip(effective, exact[:2]):
        assert abs(eff.real - ref) < 1e-3
        assert abs(eff.imag) < 1e-10


def test_eigenvalues_nearly_coalesce_at_order2_ep(zheng3):
    poly = reconstruct(p_space_series(zheng3, 2))
    roots = eigenvalues_at(poly, 0.0514718626j)
    assert abs(roots[0] - roots[1]) < 1e-5


def test_monotone_convergence_at_small_coupling(zheng3):
    cp = characteristic_polynomial(zheng3)
    exact = sorted(z.real for z in exact_eigenvalues_at(cp, 0.05))[:2]
    previous = None
    for k in (4, 6, 8, 10):
        poly = reconstruct(p_space_series(zheng3, k))
        effective = eigenvalues_at(poly, 0.05)
        error = max(abs(e.real - x) for e, x in zip(effective, exact))
        if previous is not None:
            assert error <= previous
        previous = error


def test_series_polynomial_validation():
    with pytest.raises(OrderMismatch):
        SeriesPolynomial(
            degree=2,
            order=2,
            coefficients=(TruncatedSeries.zero(2), TruncatedSeries.zero(3)),
        )
    with pytest.raises(ValueError):
        SeriesPolynomial(degree=0, order=2, coefficients=())


def test_to_dict_schema(zheng3):
    poly = reconstruct(p_space_series(zheng3, 4))
    data = poly.to_dict()
    assert data["degree"] == 2
    assert data["order"] == 4
    assert len(data["coefficients"]) == 2
    assert all(len(row) == 5 for row in data["coefficients"])
