from tolrep import suite
from tolrep.representability import NonRepCertificate


def test_broken_oracle_is_a_named_failure(monkeypatch):
    monkeypatch.setattr(suite, "naive_is_representable", lambda A, theta: False)
    r = suite.criterion_2()
    assert not r.passed and "disagreements=0" not in r.detail


def test_crash_is_a_named_failure(monkeypatch):
    def boom(*a, **k):
        raise RuntimeError("lattice witness removed")

    monkeypatch.setattr(suite, "lattice_witness", boom)
    r = suite.criterion_1()
    assert not r.passed
    assert r.line() == "CRITERION 1 lattice-representability FAIL error=RuntimeError:lattice witness removed"


def test_wrong_search_result_fails_counterexample(monkeypatch):
    def fake(A, theta, budget=None):
        return NonRepCertificate(theta, 16, 1, 0, exhausted=False)

    import tolrep.representability as rep
    monkeypatch.setattr(rep, "is_representable", fake)
    assert not suite.criterion_3().passed


def test_frozen_counts_checked(monkeypatch):
    monkeypatch.setitem(suite.FROZEN_TOLERANCE_COUNTS, "C3", 6)
    assert not suite.criterion_1().passed


def test_time_limit_enforced():
    r = suite._timed(9, "slow", 0.0, lambda: (True, "ok"))
    assert not r.passed and "over-time-limit" in r.detail


def test_replay_report_is_independent_of_jobs():
    assert suite.replay_report(jobs=1) == suite.replay_report(jobs=2)
