import pytest
from hypothesis import given, strategies as st

from punctual import verdicts
from punctual.diagram import YoungDiagram, classify, from_partition, step_sequences, transpose
from punctual.verdicts import (OracleCapError, analyze, check_corollaries, dim_tangent_pn,
                               rank_closed, survey, verify)

from conftest import all_diagrams

diagrams = st.lists(st.integers(1, 8), min_size=1, max_size=8).map(from_partition)


@pytest.mark.parametrize("rows, r", [((7, 3, 2, 2), 6), ((1,), 2), ((5, 2, 1, 1), 5)])
def test_rank_closed(rows, r):
    assert rank_closed(YoungDiagram(rows)) == r


@pytest.mark.parametrize("rows, dim", [((7, 3, 2, 2), 22), ((3, 2, 1), 10), ((4,), 3)])
def test_dim_tangent(rows, dim):
    assert dim_tangent_pn(YoungDiagram(rows)) == dim


def test_corollary_examples():
    d = YoungDiagram((3, 1, 1))
    assert dim_tangent_pn(d) == 6 == d.n + 1
    assert all(check_corollaries(d).values())
    assert dim_tangent_pn(YoungDiagram((3, 2, 1))) == 10
    assert dim_tangent_pn(YoungDiagram((5,))) == 4
    assert all(check_corollaries(YoungDiagram((1,))).values())


def test_survey_examples():
    assert len(survey(4)) == 5
    (stair,) = [r for r in survey(6) if r.partition == [3, 2, 1]]
    assert stair.dim_tangent_pn == 10
    (ex,) = [r for r in survey(9) if r.partition == [5, 2, 1, 1]]
    assert (ex.rank_closed, ex.dim_tangent_pn) == (5, 13)


def test_survey_order_follows_enumeration():
    assert [r.partition for r in survey(4)] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_survey_oracle_cap():
    with pytest.raises(OracleCapError):
        survey(13, with_oracles=True)
    assert len(survey(13)) == 101


def test_survey_with_oracles_parallel_matches_serial():
    serial = survey(6, with_oracles=True)
    parallel = survey(6, with_oracles=True, jobs=2)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]
    assert all(r.oracles_agree for r in serial)


def test_report_dict_omits_missing_oracles():
    plain = analyze(YoungDiagram((2, 1))).to_dict()
    assert "rank_alpha" not in plain and "oracles_agree" not in plain
    full = analyze(YoungDiagram((2, 1)), ("alpha",)).to_dict()
    assert full["rank_alpha"] == 2 and full["oracles_agree"] is True
    assert "rank_deform" not in full


def test_analyze_unknown_oracle():
    with pytest.raises(ValueError):
        analyze(YoungDiagram((1,)), ("magic",))


def test_verify_small():
    result = verify(6)
    assert result.passed and result.diagrams_checked == 1 + 2 + 3 + 5 + 7 + 11
    one = verify(1)
    assert one.passed and one.diagrams_checked == 1
    with pytest.raises(ValueError):
        verify(0)


def test_verify_reports_counterexample(monkeypatch):
    real = verdicts.check_diagram

    def sabotaged(d):
        checks = real(d)
        if d.rows == (2, 1):
            checks["rank_deform"] = False
        return checks

    monkeypatch.setattr(verdicts, "check_diagram", sabotaged)
    result = verify(4)
    assert not result.passed
    assert result.first_counterexample == ("2+1", ["rank_deform"])
    assert result.to_dict()["first_counterexample"]["partition"] == "2+1"


@given(diagrams)
def test_dimension_symmetric_under_transpose(d):
    assert dim_tangent_pn(transpose(d)) == dim_tangent_pn(d)


@given(diagrams)
def test_rank_range(d):
    if d.n >= 2:
        r = rank_closed(d)
        assert 2 <= r <= d.n + 1
        assert (r == d.n + 1) == classify(d)["is_curvilinear"]
        assert d.n - 1 <= dim_tangent_pn(d) <= 2 * d.n - 2


def test_hook_rank_arithmetic():
    for d in all_diagrams(15):
        f = classify(d)
        if f["is_hook"] and not f["is_curvilinear"]:
            dh, dv = step_sequences(d)
            assert dh[0] == 1 and dv[-1] == 1 and len(dh) == 2
            assert rank_closed(d) == dh[1] + dv[0]
