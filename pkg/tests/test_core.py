import numpy as np
import pytest
from hypothesis import given, strategies as st

from gini_bounds import (
    DomainError,
    PointBoundSpec,
    UnitPoint,
    frechet_lower,
    frechet_upper,
    point_bound_lower,
    point_bound_upper,
    product,
    rect_volume,
    reflect_first_coordinate,
)

UNIT = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def test_frechet_and_product_values():
    assert frechet_lower(0.3, 0.4) == 0.0
    assert frechet_upper(0.3, 0.4) == 0.3
    assert product(0.3, 0.4) == pytest.approx(0.12, abs=1e-15)
    assert frechet_lower(0.7, 0.8) == pytest.approx(0.5, abs=1e-15)


@given(v=UNIT)
def test_frechet_boundary_conditions(v):
    assert frechet_lower(1.0, v) == pytest.approx(v, abs=1e-15)
    assert frechet_upper(v, 1.0) == pytest.approx(v, abs=1e-15)


def test_unit_point_validation():
    UnitPoint(0.0, 1.0)
    with pytest.raises(DomainError):
        UnitPoint(-0.1, 0.5)
    with pytest.raises(DomainError):
        UnitPoint(0.5, 1.1)


def test_point_bound_spec_rejects_inadmissible_theta():
    PointBoundSpec(0.5, 0.5, 0.25)
    with pytest.raises(DomainError, match="lower Frechet"):
        PointBoundSpec(0.7, 0.8, 0.3)  # below W(0.7, 0.8) = 0.5
    with pytest.raises(DomainError, match="upper Frechet"):
        PointBoundSpec(0.3, 0.3, 0.4)  # above M = 0.3


def test_point_bound_lower_examples():
    f = point_bound_lower(PointBoundSpec(0.5, 0.5, 0.0))
    assert f(0.5, 0.5) == 0.0
    f = point_bound_lower(PointBoundSpec(0.6, 0.7, 0.4))
    # three-term max evaluates to the hinge term here
    assert f(0.5, 0.9) == pytest.approx(0.4, abs=1e-15)


def test_point_bound_upper_examples():
    f = point_bound_upper(PointBoundSpec(0.5, 0.5, 0.5))
    assert f(0.5, 0.5) == 0.5
    f = point_bound_upper(PointBoundSpec(0.3, 0.3, 0.1))
    assert f(0.9, 0.2) == pytest.approx(0.2, abs=1e-15)


def test_point_bound_degenerate_specs():
    # Pinning theta = M(a,b) forces agreement with M on the mixed quadrants
    # (exactly one coordinate past the pin), not globally: the gamma of this
    # copula is 1/2, not gamma(M) = 1, which the closed-form gamma tests pin
    # down.  Dually, theta = W(a,b) agrees with W on the two squares.
    nodes = np.linspace(0.0, 1.0, 41)
    uu, vv = np.meshgrid(nodes, nodes, indexing="ij")
    f = point_bound_lower(PointBoundSpec(0.5, 0.5, 0.5))
    mixed = ((uu >= 0.5) & (vv <= 0.5)) | ((uu <= 0.5) & (vv >= 0.5))
    diff = np.abs(f(uu, vv) - frechet_upper(uu, vv))
    assert np.max(diff[mixed]) <= 1e-15
    assert float(f(0.1, 0.2)) == 0.0  # strictly below M = 0.1
    assert float(f(0.75, 0.75)) == 0.5  # strictly below M = 0.75

    g = point_bound_upper(PointBoundSpec(0.5, 0.5, 0.0))
    squares = ((uu <= 0.5) & (vv <= 0.5)) | ((uu >= 0.5) & (vv >= 0.5))
    diff = np.abs(g(uu, vv) - frechet_lower(uu, vv))
    assert np.max(diff[squares]) <= 1e-15
    assert float(g(0.9, 0.2)) == pytest.approx(0.2)  # strictly above W = 0.1


@given(a=UNIT, b=UNIT, frac=UNIT, u=UNIT, v=UNIT)
def test_point_bounds_sandwich(a, b, frac, u, v):
    lo, hi = max(0.0, a + b - 1.0), min(a, b)
    spec = PointBoundSpec(a, b, lo + frac * (hi - lo))
    lower = float(point_bound_lower(spec)(u, v))
    upper = float(point_bound_upper(spec)(u, v))
    w, m = float(frechet_lower(u, v)), float(frechet_upper(u, v))
    assert w - 1e-12 <= lower <= upper + 1e-12 <= m + 2e-12
    assert float(point_bound_lower(spec)(a, b)) == pytest.approx(spec.theta, abs=1e-12)
    assert float(point_bound_upper(spec)(a, b)) == pytest.approx(spec.theta, abs=1e-12)


def test_rect_volume_examples():
    assert rect_volume(frechet_upper, 0.0, 1.0, 0.0, 1.0) == 1.0
    assert rect_volume(product, 0.2, 0.5, 0.4, 0.9) == pytest.approx(0.15, abs=1e-15)
    assert rect_volume(frechet_lower, 0.25, 0.5, 0.25, 0.5) == 0.0


def test_rect_volume_rejects_inverted_rectangle():
    with pytest.raises(DomainError):
        rect_volume(product, 0.5, 0.2, 0.0, 1.0)
    with pytest.raises(DomainError):
        rect_volume(product, 0.0, 1.0, 0.9, 0.4)


def test_reflection_pointwise_identities():
    nodes = np.linspace(0.0, 1.0, 81)
    uu, vv = np.meshgrid(nodes, nodes, indexing="ij")
    refl_m = reflect_first_coordinate(frechet_upper)
    assert np.max(np.abs(refl_m(uu, vv) - frechet_lower(uu, vv))) <= 1e-15
    refl_pi = reflect_first_coordinate(product)
    assert np.max(np.abs(refl_pi(uu, vv) - product(uu, vv))) <= 1e-15
