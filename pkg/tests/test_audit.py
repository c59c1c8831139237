import shutil
from importlib import resources

from polyham.audit import DISCREPANCY, FAIL, PASS, run_audit


def by_name(report):
    return {c.name: c for c in report.claims}


def test_shipped_fixtures():
    report = run_audit()
    claims = by_name(report)
    assert report.ok and report.count(FAIL) == 0
    for name in ("G1 is type-I", "G2 is type-II", "dual cycle of G1 is C1", "dual cycle of G2 is C2",
                 "C1 is non-contractible (non-separating)", "C2 is contractible",
                 "E3 is the dual edge set of C3"):
        assert claims[name].status == PASS, name
    assert claims["G3 is type-III"].status == DISCREPANCY
    assert "|E3| = 16 but n = 21" in claims["G3 is type-III"].detail
    assert claims["C3 is Hamiltonian"].status == DISCREPANCY
    assert "omits {2,3,4,8,9}" in claims["C3 is Hamiltonian"].detail
    assert claims["V3 as printed is the vertex set of E3"].status == DISCREPANCY


def test_broken_fixture_is_a_failure(tmp_path):
    src = resources.files("polyham").joinpath("fixtures")
    for item in src.iterdir():
        shutil.copy(str(item), tmp_path / item.name)
    # swap two labels in the correspondence table
    table = (tmp_path / "m1_k1.tsv").read_text().replace("\tv1\n", "\tTMP\n").replace("\tv2\n", "\tv1\n")
    (tmp_path / "m1_k1.tsv").write_text(table.replace("\tTMP\n", "\tv2\n"))
    report = run_audit(tmp_path)
    assert not report.ok
    assert by_name(report)["dual cycle of G1 is C1"].status == FAIL
