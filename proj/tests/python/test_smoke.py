import math

import numpy as np
import pytest

import cavesd


def test_reference_states():
    ghz = cavesd.ghz()
    assert ghz.shape == (8,)
    assert np.isclose(np.vdot(ghz, ghz).real, 1.0)
    rho_w = np.outer(cavesd.w(), cavesd.w().conj())
    assert cavesd.negativity(rho_w, ["c1", "c2", "c3"], ["c1"]) == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-12)
    assert cavesd.negativity(cavesd.mixed_ghz_w(1.0), ["c1", "c2", "c3"], ["c1"]) == pytest.approx(1.0, abs=1e-12)


def test_evolved_state_and_reduction():
    labels, psi = cavesd.global_output_state(0.4, 1.2)
    assert labels == ["c1", "r1", "c2", "r2", "c3", "r3", "z"]
    assert psi.shape == (128,)
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)
    rho = cavesd.reduced_cavity_state(0.4, 1.2)
    assert np.allclose(rho, rho.conj().T, atol=1e-14)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)


def test_closed_form_against_numpy():
    p, kt = 0.6, 0.9
    rho = cavesd.reduced_cavity_state(p, kt).reshape(2, 4, 2, 4)
    pt = rho.transpose(2, 1, 0, 3).reshape(8, 8)
    numeric = np.sort(np.linalg.eigvalsh(pt))
    closed = np.sort(cavesd.closed_form_pt_eigenvalues(p, kt))
    assert np.max(np.abs(numeric - closed)) < 1e-10
    assert cavesd.closed_form_negativity(p, kt) == pytest.approx(np.abs(numeric).sum() - 1.0, abs=1e-10)
    assert cavesd.hermitian_eigenvalues(pt) == pytest.approx(sorted(numeric, reverse=True), abs=1e-12)


def test_gghz_negativity():
    for a in (0.2, 0.5):
        for kt in (0.0, 0.4, 1.0):
            assert cavesd.gghz_negativity_closed(a, kt) == pytest.approx(cavesd.gghz_cavity_negativity(a, kt), abs=1e-10)


def test_wootters_on_bell_state():
    bell = np.array([1, 0, 0, 1]) / math.sqrt(2)
    assert cavesd.wootters_concurrence(np.outer(bell, bell)) == pytest.approx(1.0, abs=1e-12)


def test_times_and_boundaries():
    assert cavesd.esd_time(0.1) is None
    assert cavesd.esd_time(0.385) == pytest.approx(1.091, abs=0.005)
    assert cavesd.esb_time(math.log(2)) == pytest.approx(math.log(2))
    assert cavesd.gghz_esd_time(0.8) is None
    assert cavesd.lambda7_boundary(20.0) == pytest.approx(0.25, abs=1e-6)
    assert cavesd.gghz_esd_boundary(20.0) == pytest.approx(math.sqrt(0.5), abs=1e-4)
    assert cavesd.classify_region(0.5, 5.0) == "IV"
    p, kt = cavesd.min_esd_point()
    assert p == pytest.approx(0.385, abs=0.005)
    assert kt == pytest.approx(1.091, abs=0.005)


def test_monogamy_and_swap():
    rec = cavesd.monogamy_chain(0.5, 1.0)
    assert rec["c_init_sq"] == pytest.approx(rec["c_pair_sq"], abs=1e-10)
    assert rec["mixed_concurrence_evaluated"] is False
    passed, dev = cavesd.swap_check(0.3, 0.7)
    assert passed and dev < 1e-12


def test_surface_and_verify():
    csv = cavesd.surface_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "param,kt,negativity"
    assert len(lines) == 342
    assert lines[1].startswith("0,0,0.9428")
    passed, text = cavesd.verify("swap")
    assert passed and "PASS" in text
    passed, _ = cavesd.verify("monogamy", 1e-30)
    assert not passed


def test_errors():
    with pytest.raises(ValueError):
        cavesd.esd_time(1.5)
    with pytest.raises(ValueError):
        cavesd.negativity(np.eye(4) / 4, ["c1", "c2"], ["c1", "c2"])
    with pytest.raises(ValueError):
        cavesd.verify("nope")
    with pytest.raises(ValueError):
        cavesd.lambda7_boundary(200.0)
    assert issubclass(cavesd.DomainError, ValueError)
