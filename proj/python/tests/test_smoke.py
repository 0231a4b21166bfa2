import pytest

import f2q


def test_catalog_mapping_verifies():
    m = f2q.build_mapping("exact-bosonization", 4, 4)
    assert m.num_qubits == 32
    assert m.ratio == (2, 1)
    checks = f2q.verify(m)
    assert all(c["pass"] for c in checks), checks
    assert f2q.degeneracy(m) == 4


def test_weight_table_row():
    assert f2q.weight_table(f2q.build_mapping("compact", 4, 4)) == "1.5 1 3 8"


def test_manifest_round_trip():
    m = f2q.build_mapping("bksf", 2, 2)
    text = f2q.to_manifest(m)
    assert f2q.to_manifest(f2q.from_manifest(text)) == text
    with pytest.raises(f2q.ManifestError):
        f2q.from_manifest("garbage\n")


def test_pauli_products():
    x = f2q.PauliOperator("i^0 0:X", 2)
    z = f2q.PauliOperator("i^0 0:Z", 2)
    assert not x.commutes(z)
    assert str(x * z) == "i^3 0:Y"


def test_majorana_products():
    g0 = f2q.MajoranaMonomial("i^0 g0")
    g1 = f2q.MajoranaMonomial("i^0 g1")
    assert str(g1 * g0) == "i^2 g0 g1"
    assert not g0.commutes(g1)
    assert (g0 * g0).modes == []


def test_size_error():
    with pytest.raises(f2q.SizeError):
        f2q.build_mapping("super_compact_direct", 6, 4)


def test_oracle_on_small_mapping():
    checks = f2q.oracle_check(f2q.build_mapping("verstraete-cirac", 2, 2))
    assert [c["name"] for c in checks] == ["oracle.products", "oracle.codespace", "oracle.loops"]
    assert all(c["pass"] for c in checks)


def test_pipeline_reaches_five_quarters():
    m, report = f2q.run_pipeline("r125", 4, 4)
    assert m.ratio == (5, 4)
    assert "ratio_after 1.25" in report


def test_table_and_separators():
    rows = {label: status for label, _, _, status in f2q.reproduce_table()}
    assert rows["Exact bosonization"] == "MATCH"
    assert rows["MLSC"] == "CONTINGENT"
    scan = f2q.separator_scan(2)
    assert scan["ok"]
    assert scan["grey_fraction"] == (1, 4)
