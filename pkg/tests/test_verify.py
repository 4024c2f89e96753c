import copy

import pytest

from andrasfai.spectra import TOL_CLUSTER
from andrasfai.verify import (
    CLAIMS,
    run_sweep,
    verify_distinct_count,
    verify_extremes,
    verify_gcd_certificate,
    verify_palindrome,
    verify_plus_minus_one,
)

from reference import GOLDEN_TOL


@pytest.fixture(scope="module")
def small_sweep():
    return run_sweep(2, 8, oracle_limit=600)


class TestDistinctCount:
    @pytest.mark.parametrize("k, expected", [(5, 8), (4, 6), (3, 5)])
    def test_reference_counts(self, k, expected):
        verdict = verify_distinct_count(k)
        assert verdict.status == "pass"
        assert verdict.predicted["count"] == expected
        assert verdict.observed["closed_form_count"] == expected
        assert verdict.observed["oracle_count"] == expected

    def test_k200_closed_form_only(self):
        verdict = verify_distinct_count(200, use_oracle=False)
        assert verdict.status == "pass"
        assert verdict.predicted["count"] == 300
        assert verdict.observed["oracle_count"] is None


class TestExtremes:
    def test_k5(self):
        smallest, second = verify_extremes(5)
        assert smallest.status == "pass"
        assert smallest.observed["indices"] == [5, 9]
        assert smallest.observed["value"] == pytest.approx(-4.048917, abs=GOLDEN_TOL)
        assert second.status == "pass"
        assert second.observed["indices"] == [4, 10]
        assert second.observed["value"] == pytest.approx(1.801938, abs=GOLDEN_TOL)

    def test_k2(self):
        smallest, second = verify_extremes(2)
        assert smallest.observed["indices"] == [2, 3]
        assert smallest.observed["value"] == pytest.approx(-1.618034, abs=1e-6)
        assert second.observed["indices"] == [1, 4]
        assert second.observed["value"] == pytest.approx(0.618034, abs=1e-6)


class TestPlusMinusOne:
    def test_k5(self):
        minus, plus = verify_plus_minus_one(5)
        assert minus.status == "pass"
        assert minus.observed["indices"] == [7]
        assert minus.observed["oracle_multiplicity"] == 1
        assert plus.status == "pass"
        assert not plus.observed["present"]

    def test_k3_plus_one_erratum(self):
        minus, plus = verify_plus_minus_one(3)
        assert minus.status == "pass"
        assert minus.observed["indices"] == [4]
        assert plus.status == "erratum_detected"
        assert plus.observed["indices"] == [2, 6]
        assert plus.observed["multiplicity"] == 2
        assert plus.predicted["claimed_multiplicity"] == 1

    def test_k4_both_absent(self):
        minus, plus = verify_plus_minus_one(4)
        assert minus.status == "pass" and not minus.observed["present"]
        assert plus.status == "pass" and not plus.observed["present"]


class TestSingleClaims:
    def test_palindrome(self):
        verdict = verify_palindrome(17)
        assert verdict.status == "pass"
        assert verdict.observed["max_abs_dev"] < 1e-9

    def test_gcd_certificate(self):
        verdict = verify_gcd_certificate(9)
        assert verdict.status == "pass"
        assert verdict.observed["g"] == 2


class TestRunSweep:
    def test_verdict_count_and_erratum(self, small_sweep):
        ks = range(2, 9)
        assert len(small_sweep.verdicts) == 7 * len(ks)
        not_pass = [v for v in small_sweep.verdicts if v.status != "pass"]
        assert [(v.k, v.claim_id, v.status) for v in not_pass] == [
            (3, "plus_one", "erratum_detected"),
            (7, "plus_one", "erratum_detected"),
        ]
        assert small_sweep.exit_code() == 0

    def test_verdict_completeness_and_order(self, small_sweep):
        expected = [(k, c) for k in range(2, 9) for c in CLAIMS]
        assert [(v.k, v.claim_id) for v in small_sweep.verdicts] == expected

    def test_erratum_containment(self, small_sweep):
        for v in small_sweep.verdicts:
            if v.status == "erratum_detected":
                assert v.claim_id == "plus_one"
                assert v.observed["multiplicity"] == 2

    def test_min_gap_supports_tolerances(self, small_sweep):
        assert small_sweep.min_gap > TOL_CLUSTER
        assert small_sweep.oracle_max_dev < 1e-8

    def test_documented_small_range(self):
        report = run_sweep(2, 5, 600)
        assert len(report.verdicts) == 28
        not_pass = [(v.k, v.claim_id) for v in report.verdicts if v.status != "pass"]
        assert not_pass == [(3, "plus_one")]

    def test_oracle_disabled(self):
        report = run_sweep(2, 2, oracle_limit=0)
        assert len(report.verdicts) == 7
        assert all(v.status == "pass" for v in report.verdicts)
        distinct = report.verdicts[0]
        assert distinct.observed["oracle_count"] is None
        assert report.oracle_max_dev == 0.0

    def test_bad_range_rejected(self):
        with pytest.raises(ValueError, match="k_min"):
            run_sweep(5, 2, 600)
        with pytest.raises(ValueError, match="k_min"):
            run_sweep(1, 4, 600)

    def test_deterministic_reports(self):
        a = run_sweep(2, 10, oracle_limit=0).to_json_dict()
        b = run_sweep(2, 10, oracle_limit=0).to_json_dict()
        a.pop("wall_time")
        b.pop("wall_time")
        assert a == copy.deepcopy(b)

    def test_json_dict_schema(self, small_sweep):
        data = small_sweep.to_json_dict()
        assert data["k_range"] == [2, 8]
        assert set(data) == {"k_range", "verdicts", "min_gap", "oracle_max_dev", "wall_time"}
        for v in data["verdicts"]:
            assert set(v) == {"claim", "k", "status", "predicted", "observed", "detail"}
