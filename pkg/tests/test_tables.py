import pytest

from fqcluster.cluster import count_avoiders
from fqcluster.tables import TABLES, compute_table, diff_table, errata, golden
from fqcluster.series import Polynomial


def test_golden_shapes():
    assert sorted(TABLES) == list(range(1, 12))
    for tid in TABLES:
        rows = golden(tid)
        assert len(rows) == 10
        assert rows[0] == Polynomial.const(1)


def test_captions():
    assert TABLES[6].caption == "Distribution of ilpk over S_n(1234)"
    assert TABLES[9].caption == "Distribution of ides over S_n(13245)"


def test_unknown_table():
    with pytest.raises(ValueError, match="valid ids are 1, 2"):
        golden(12)


def test_row_sums_count_avoiders():
    # every family sums to |S_n(pattern)| at t = 1, except the recorded misprint
    bad = set()
    for tid, spec in TABLES.items():
        for n, row in enumerate(golden(tid)):
            if row.evaluate(t=1) != Polynomial.const(count_avoiders(n, spec.pattern)):
                bad.add((tid, n))
    assert bad == set(errata())


def test_misprint_is_the_only_one():
    (key, (printed, corrected, reason)), = errata().items()
    assert key == (4, 7)
    assert printed.coeff(t=3) == 2553 and corrected.coeff(t=3) == 2532
    assert corrected.evaluate(t=1) == Polynomial.const(4326) == golden(2)[7].evaluate(t=1)
    assert "4347" in reason


@pytest.mark.parametrize("tid", range(1, 12))
@pytest.mark.parametrize("method", ["closed", "spec"])
def test_series_routes_match_corrected_tables(tid, method):
    assert diff_table(tid, method, apply_errata=True) == []


def test_fqsym_route_small_rows():
    for tid in (1, 5, 9):
        assert compute_table(tid, "fqsym", 6) == golden(tid)[:7]
