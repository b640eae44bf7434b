from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pants_lab import constants as C


@pytest.mark.parametrize("k, h", [(17, 68), (0, 0), (8900, 35600)])
def test_centered_to_thin(k, h):
    assert C.centered_to_thin(k) == h


@pytest.mark.parametrize("chain, M, value", [
    ("thm31.case1", 100, 285),
    ("thm31.case3", 100, 8900),
    ("thm41.case1.link", 100, 80000),
    ("thm41.case1.center", 100, 124500),
    ("thm41.case3", 100, 6191300),
    ("thm31.case3", 1, 89),
])
def test_chain_values(chain, M, value):
    assert C.proof_chain_eval(chain, M) == value


def test_unknown_chain():
    with pytest.raises(C.UnknownChain):
        C.proof_chain_eval("nope", 100)


def _unexpanded(chain, M):
    # the products as written out term by term
    if chain == "thm31.case1":
        return 17 * 5 + 2 * M
    if chain == "thm31.case3":
        return 16 * (5 * M) + 5 * M + 4 * M
    if chain == "thm41.case1.link":
        return 8 * M ** 2
    if chain == "thm41.case1.center":
        return 89 * M + 4 * 89 * M + 8 * M ** 2
    return 16 * 5 * M * 7 * M + (4 * M - 1) * 6 * M + 12 * M + (5 * M + 1) * 7 * M


@pytest.mark.parametrize("chain", C.CHAIN_IDS)
def test_closed_forms_match_products(chain):
    for M in range(1, 201):
        assert C.proof_chain_eval(chain, M) == _unexpanded(chain, M)


def test_bgit_constant_validation():
    assert C.BgitConstant().value == 100
    with pytest.raises(ValueError):
        C.BgitConstant(0)


@pytest.mark.parametrize("h, m", [(0, 0), (1, 22)])
def test_min_m_small(h, m):
    assert C.bowditch_min_m(h) == m


def test_min_m_headline():
    assert abs(C.bowditch_min_m(35600) - 1912958) <= 1


@pytest.mark.parametrize("h, delta", [(0, 0), (1, 28), (356, 19348)])
def test_delta_small(h, delta):
    assert C.bowditch_delta(h) == delta


def test_delta_headline():
    assert abs(C.bowditch_delta(35600) - 2691437) <= 3


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=10**6))
def test_min_m_is_certified_minimal(h):
    m = C.bowditch_min_m(h)
    assert C.certified_holds(h, m)
    assert not C.certified_holds(h, m - 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**5), st.integers(min_value=0, max_value=10**5))
def test_delta_monotone(a, b):
    lo, hi = sorted((a, b))
    assert C.bowditch_delta(lo) <= C.bowditch_delta(hi)


def test_pipeline_complexity2():
    r = C.theorem_pipeline("complexity2", 100)
    assert [v for _, v in r.case_bounds] == [285, 8900]
    assert r.centered_k == 8900 and r.thin_h == 35600
    assert r.thin_h == 4 * C.proof_chain_eval("thm31.case3", 100)
    assert abs(r.delta_computed - 2691437) <= 3
    assert r.delta_paper == [("thm32", 2691437)]
    assert r.inequality_at_m and not r.inequality_at_m_minus_1
    assert r.delta_computed == -((-(3 * r.bowditch_m - 10 * r.thin_h)) // 2)


def test_pipeline_complexity3_flags():
    r = C.theorem_pipeline("complexity3", 100)
    assert r.centered_k == 6191300 and r.thin_h == 24765200
    assert dict(r.case_bounds)["thm41.case1.link"] == 80000
    assert dict(r.case_bounds)["thm41.case1.center"] == 124500
    assert r.delta_computed == 2607425314
    assert Fraction(r.delta_rational) == Fraction(5214850627, 2)
    assert r.discrepancy_flags
    for _, v in r.delta_paper:
        assert abs(v - r.delta_computed) > 3
    assert r.center_decomposition == {"center_to_inner_side": 8900, "thin_crossing": 35600, "link_length": 80000}


def test_pipeline_small_M():
    r = C.theorem_pipeline("complexity2", 1)
    assert r.centered_k == 89 and r.thin_h == 356
    assert r.delta_computed == C.bowditch_delta(356)
    assert r.delta_paper == []


def test_report_serializations():
    r = C.theorem_pipeline("complexity2", 100)
    d = r.to_dict()
    for key in ("surface_class", "M", "curve_center_k", "case_bounds", "centered_k", "thin_h",
                "bowditch_m", "delta_computed", "delta_paper", "discrepancy_flags"):
        assert key in d
    assert d["curve_center_k"] == 17
    assert "2691437" in r.to_text().replace(",", "")


def test_pipeline_rejects_unknown_class():
    with pytest.raises(ValueError):
        C.theorem_pipeline("complexity9", 100)
