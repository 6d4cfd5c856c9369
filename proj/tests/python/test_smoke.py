"""Smoke tests for the python module: end-to-end sanity, not exhaustiveness."""

import cmath

import cellmod


def test_quantum_anchors():
    phi = cellmod.quantum_number(2, 4)
    assert cellmod.quantum_number(3, 4) == phi
    assert cellmod.quantum_number(9, 4) == cellmod.Cyclo.integer(-1)
    assert cellmod.quantum_number(4, 3).is_zero()
    assert abs(phi.to_complex() - (1 + 5 ** 0.5) / 2) < 1e-12


def test_cyclo_arithmetic():
    z = cellmod.Cyclo.root_of_unity(8, 1)
    sqrt2 = z + z.inverse()
    assert sqrt2 * sqrt2 == cellmod.Cyclo.integer(2)
    assert sqrt2.conj() == sqrt2
    assert cmath.isclose(sqrt2.to_complex().real, 2 ** 0.5)


def test_smatrix_symmetry():
    s = cellmod.smatrix(5)
    entries = s["entries"]
    assert len(entries) == 5
    for i in range(5):
        for j in range(5):
            assert entries[i][j] == entries[j][i]


def test_jring_and_cells():
    ring = cellmod.jring_dihedral(5)
    assert len(ring["basis"]) == 8
    fib = cellmod.jring_dihedral(5, hcell="s")
    assert fib["basis"] == ["s", "sts"]
    cells = cellmod.cells_dihedral(5)
    assert [c["a_value"] for c in cells] == [0, 1, 5]


def test_centers():
    cd = cellmod.center_adjoint(3)
    assert len(cd["simples"]) == 4
    assert cellmod.mset_size("S4") == 21
    assert cellmod.mset_size("S5") == 39
    s3 = cellmod.center_vec("S3")
    assert len(s3["simples"]) == 8
    twisted = cellmod.center_vec("Z2", twist=True)
    assert twisted["smatrix"][2][2]["coeffs"] == ["-1"]


def test_sixj_fibonacci_entry():
    v = cellmod.sixj(4, 2, 2, 2, 2, 0, 0)
    phi = cellmod.quantum_number(2, 4)
    assert v == phi.inverse()


def test_verification():
    for n in (3, 4, 5, 6):
        assert cellmod.verify_dihedral(n)["verdict"] == "matched"
    assert cellmod.verify_weyl("S3")["verdict"] == "matched"
    assert cellmod.verify_h_case("C")["verdict"] == "matched"


def test_cli_passthrough():
    code, out, err = cellmod.cli(["verify", "dihedral", "7"])
    assert code == 0 and '"verdict": "matched"' in out
    code, _, err = cellmod.cli(["verify", "h-case", "E"])
    assert code == 2 and "out of scope" in err
