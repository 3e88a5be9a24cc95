import pytest

from griess_forge.codes import golay12
from griess_forge.gluing import (
    e8_glue, niemeier_a2_12, n0_sublattice, leech, delta_hat,
    codeword_isometry, tau_bar_matrix, e_copies_rows,
)
from griess_forge.intmat import int_matvec, int_matmul, int_identity
from griess_forge.lattices import build_root_lattice, short_vectors, isometry_test

D1 = (0, -1, -1, -1, 0, 0, 0, 0, 0, 1, 1, 1)
D2 = (1, 1, 0, -1, 0, 0, 0, 0, 1, 1, -1, 0)


def test_glued_e8_is_e8():
    eg = e8_glue()
    lat = eg.lattice
    assert lat.rank == 8
    assert lat.det() == 1
    assert lat.is_even()
    assert len(short_vectors(lat, 2)) == 240
    assert isometry_test(lat, build_root_lattice("E", 8)) is not None


def test_tau_bar_order_three():
    m = tau_bar_matrix()
    m3 = int_matmul(m, int_matmul(m, m))
    assert m3 == int_identity(2)


def test_niemeier_properties():
    niem = niemeier_a2_12()
    lat = niem.lattice
    assert lat.rank == 24
    assert lat.det() == 1
    assert lat.is_even()


def test_niemeier_roots_are_the_blocks():
    lat = niemeier_a2_12().lattice
    assert len(short_vectors(lat, 2)) == 72


def test_n0_index_three_rootless():
    niem = niemeier_a2_12()
    n0 = n0_sublattice(niem)
    sub = niem.sublattice_in_basis(n0.basis)
    assert sub.index() == 3
    assert len(short_vectors(n0.lattice, 2)) == 0


def test_leech_even_unimodular():
    lam = leech()
    lat = lam.lattice
    assert lat.rank == 24
    assert lat.det() == 1
    assert lat.is_even()
    assert len(short_vectors(lat, 2)) == 0


@pytest.mark.slow
def test_leech_minimal_vector_count():
    lam = leech()
    assert len(short_vectors(lam.lattice, 4)) == 196560


def test_codeword_isometry_preserves_everything():
    niem = niemeier_a2_12()
    g = golay12()
    h1 = codeword_isometry(niem.space, D1, g)
    # order divides 3
    h3 = int_matmul(h1, int_matmul(h1, h1))
    assert h3 == int_identity(24)
    # preserves N
    for row in niem.basis:
        assert int_matvec(h1, row) in niem
    # preserves the form
    dh = delta_hat(niem.space)
    for row in niem.basis:
        img = int_matvec(h1, row)
        assert niem.space.dot9(img, img) == niem.space.dot9(row, row)
    # preserves N0 and the Leech lattice setwise
    n0 = n0_sublattice(niem)
    for row in n0.basis:
        assert int_matvec(h1, row) in n0
    lam = leech(niem)
    for row in lam.basis:
        assert int_matvec(h1, row) in lam


def test_codeword_isometry_rejects_noncodeword():
    niem = niemeier_a2_12()
    with pytest.raises(ValueError):
        codeword_isometry(niem.space, (1,) + (0,) * 11, golay12())


def test_identity_word_is_identity():
    niem = niemeier_a2_12()
    h = codeword_isometry(niem.space, (0,) * 12, golay12())
    assert h == int_identity(24)
