import pytest

from smoothperm.verify import MAX_FAILURES, SUITES, VerificationReport, _Log, run_suite, run_suites


@pytest.mark.parametrize("theorem", sorted(SUITES))
def test_every_suite_passes_through_five(theorem):
    report = run_suite(theorem, 1, 5)
    assert report.passed, report.failures
    assert report.cases > 0


def test_bijection_suite_counts_smooth():
    assert run_suite("1.1", 5, 5).cases == 88


def test_results_do_not_depend_on_jobs():
    one = run_suites(["1.1", "1.4"], 1, 5, jobs=1)
    two = run_suites(["1.1", "1.4"], 1, 5, jobs=2)
    assert [(r.cases, r.failures) for r in one] == [(r.cases, r.failures) for r in two]


def test_report_shape():
    r = VerificationReport("1.1", 3, 3, cases=6)
    assert r.passed and r.summary().startswith("PASS 1.1 n=3 cases=6 failures=0")
    r.failures.append("perm 2,1")
    assert not r.passed and r.as_dict()["passed"] is False


def test_failure_log_is_capped():
    log = _Log()
    for k in range(MAX_FAILURES + 5):
        log.check(False, lambda: f"case {k}")
    assert log.cases == MAX_FAILURES + 5 and len(log.failures) == MAX_FAILURES


def test_rejects_bad_requests():
    with pytest.raises(ValueError):
        run_suites(["2.7"], 1, 3)
    with pytest.raises(ValueError):
        run_suites(["1.1"], 4, 3)
