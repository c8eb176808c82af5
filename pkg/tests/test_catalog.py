import json
from pathlib import Path

import pytest

from matroid_valuations.catalog import (
    TABLE2_COEFFS,
    TABLE2_RANKS,
    activity_table,
    activity_table_tsv,
    matroid_from_rank_row,
    octahedron_subdivision,
    parity_violations,
    subdivision_report,
    table2_matroids,
    table2_report,
    u36_subdivision,
)
from matroid_valuations.errors import InternalDisagreement
from matroid_valuations.matroid import from_mask
from matroid_valuations.subdivision import Subdivision

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def u36():
    return u36_subdivision().validate()


def test_table1_matches_golden_bytes(u36):
    assert activity_table_tsv(u36) == (GOLDEN / "table1.tsv").read_text()


def test_table1_shape(u36):
    header, rows = activity_table(u36)
    assert len(header) == 17 and len(rows) == 20
    assert header[1:5] == ["E(M)", "I(M)", "E(M1)", "I(M1)"]
    row = dict(zip(header, next(r for r in rows if r[0] == "136")))
    assert (row["E(M123)"], row["I(M123)"]) == ("5", "13")


def test_table1_parity(u36):
    assert parity_violations(u36) == []


def test_single_pyramid_is_not_a_subdivision():
    S = octahedron_subdivision()
    bogus = Subdivision(S.ambient, S.cells[:1]).validate()
    assert not bogus.validated


def test_table2_rank_rows_recovered():
    for M, row in zip(table2_matroids(), TABLE2_RANKS):
        assert M.n == 4
        for mask in range(16):
            assert M.rank_of_mask(mask) == row[mask]
            # rank as the largest intersection with a basis, computed afresh
            assert max(len(set(from_mask(mask)) & set(B)) for B in M.bases) == row[mask]


def test_table2_bad_row_fails_loudly():
    row = list(TABLE2_RANKS[3])
    # make {1} and {1,2} rank 0: the recovered bases {2},{3},{4} give {1,2} rank 1
    row[1] = 0
    row[3] = 0
    with pytest.raises(InternalDisagreement):
        matroid_from_rank_row(4, row)


def test_table2_syzygy():
    report = table2_report()
    assert report["rank_rows_match"] and report["F_sum_zero"]
    assert report["G_sum_nonzero"] and report["QS_sum_nonzero"] and report["H_sum_nonzero"]
    assert report["coefficients"] == list(TABLE2_COEFFS) and report["verified"]


def test_octahedron_report_matches_golden():
    report = subdivision_report(octahedron_subdivision())
    assert report == json.loads((GOLDEN / "octahedron.json").read_text())
