import math

import pytest

import nlkg


def test_q_exp_reduces_to_exp():
    assert abs(nlkg.q_exp(0.3 + 0.2j, 1.0) - complex(math.e ** 0.3) * complex(math.cos(0.2), math.sin(0.2))) < 1e-14


def test_complex_class_verifies():
    p = nlkg.solve_complex_class(1.5, 1.3, 0.2, 1.0)
    assert nlkg.validate(p)[0]
    w = nlkg.WaveVector.on_shell([0.3, -0.2, 0.1], p.m)
    assert nlkg.verify_pde(p, w).max_rel < 1e-6
    assert nlkg.verify_travelwave(p).max_rel < 1e-10


def test_record_round_trip():
    p = nlkg.solve_real_case2(1.5, 0.7, 0.9, 1.2)
    assert nlkg.ModelParams.from_record(p.to_record()).to_record() == p.to_record()


def test_exponent_pair_standard_limit():
    assert nlkg.exponent_pair(1.0, 0.7, 0.0) == (1.0 - 1.4, 0.7)


def test_soliton_energy():
    w = nlkg.WaveVector(math.sqrt(2.0), [1.0], 1.0)
    s = nlkg.make_soliton_setup(1.0, 2.0, w)
    assert abs(nlkg.soliton_energy(s) - 2 * math.pi) < 1e-8
    assert abs(nlkg.density_from_hamiltonian(s, 0.0, 0.0) - 2.0) < 1e-10


def test_lattice_convergence():
    p = nlkg.solve_real_case1(3.0, 0.25, 1.0, 2, 1.0)
    w = nlkg.WaveVector.on_shell([1.0], 1.0)
    rows = nlkg.convergence_study(p, w, 0.9, 5.4, 0.5, [8e-3, 4e-3])
    assert rows[0]["observed_order"] is None
    assert 1.8 <= rows[1]["observed_order"] <= 2.2


def test_errors_are_typed():
    with pytest.raises(nlkg.ConstraintError):
        nlkg.make_soliton_setup(1.0, 1.0, nlkg.WaveVector(1.0, [0.0], 1.0))
    with pytest.raises(nlkg.Error):
        nlkg.exponent_pair(0.0, 1.5, 0.0)
