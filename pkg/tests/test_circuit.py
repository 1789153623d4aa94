import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grovercount.circuit import (
    Circuit,
    GateKind,
    H,
    MCZ,
    SearchSpec,
    X,
    build_diffusion,
    build_grover,
    build_oracle,
    build_single_oracle,
    to_matrix,
)
from grovercount.errors import SizeError
from grovercount.planner import theta
from grovercount.statevector import (
    apply_circuit,
    basis_state,
    run_grover,
    success_probability_of,
)

from oracles import phase_oracle, reflection_about_uniform


def target_sets(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=1 << n),
        )
    )


def test_single_oracle_1101():
    c = build_single_oracle(4, 0b1101)
    assert c.gates == (X(1), MCZ, X(1))


def test_single_oracle_n1_target_one_is_bare_z():
    assert build_single_oracle(1, 1).gates == (MCZ,)


def test_single_oracle_00():
    c = build_single_oracle(2, 0)
    assert c.gates == (X(0), X(1), MCZ, X(0), X(1))
    np.testing.assert_allclose(to_matrix(c), np.diag([-1, 1, 1, 1]), atol=1e-15)


def test_single_oracle_index_error():
    with pytest.raises(IndexError):
        build_single_oracle(2, 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_single_oracle_flips_only_target(n):
    for target in range(1 << n):
        c = build_single_oracle(n, target)
        for b in range(1 << n):
            out = apply_circuit(basis_state(n, b), c).amplitudes
            assert out[b] == (-1 if b == target else 1)


def test_oracle_all_targets_is_minus_identity():
    u = to_matrix(build_oracle(SearchSpec(2, (0, 1, 2, 3))))
    np.testing.assert_allclose(u, -np.eye(4), atol=1e-15)


def test_oracle_top_state_is_bare_mcz():
    c = build_oracle(SearchSpec(2, (3,)))
    assert c.gates == (MCZ,)
    np.testing.assert_allclose(to_matrix(c), np.diag([1, 1, 1, -1]))


def test_oracle_nine_targets():
    targets = (0, 2, 3, 5, 7, 8, 11, 12, 14)
    u = to_matrix(build_oracle(SearchSpec(4, targets)))
    np.testing.assert_allclose(u, phase_oracle(4, targets), atol=1e-12)
    assert np.count_nonzero(np.isclose(np.diag(u), -1)) == 9


def test_oracle_targets_ascending():
    spec = SearchSpec(3, (6, 1, 4))
    assert spec.targets == (1, 4, 6)
    expected = sum((build_single_oracle(3, t) for t in (1, 4, 6)), Circuit(3))
    assert build_oracle(spec) == expected


@settings(max_examples=40, deadline=None)
@given(target_sets())
def test_oracle_matrix_property(case):
    n, targets = case
    u = to_matrix(build_oracle(SearchSpec(n, tuple(targets))))
    assert np.max(np.abs(u - phase_oracle(n, targets))) < 1e-10


def test_diffusion_n1():
    np.testing.assert_allclose(to_matrix(build_diffusion(1)), [[0, -1], [-1, 0]], atol=1e-15)


def test_diffusion_n2():
    u = to_matrix(build_diffusion(2))
    expected = np.full((4, 4), -0.5) + np.eye(4)
    np.testing.assert_allclose(u, expected, atol=1e-15)


@pytest.mark.parametrize("n", range(1, 7))
def test_diffusion_matches_reflection(n):
    u = to_matrix(build_diffusion(n))
    assert np.max(np.abs(u - reflection_about_uniform(n))) < 1e-10
    assert np.max(np.abs(u @ u - np.eye(1 << n))) < 1e-10


def test_grover_k0_is_preparation():
    spec = SearchSpec(3, (5,))
    c = build_grover(spec, 0)
    assert c.gates == tuple(H(q) for q in range(3))
    assert success_probability_of(run_grover(spec, 0), spec.targets) == pytest.approx(1 / 8)


def test_grover_16_1_k3():
    spec = SearchSpec.from_bitstrings(["1101"])
    # exact value 63001/65536 from the Chebyshev oracle
    p = success_probability_of(run_grover(spec, 3), spec.targets)
    assert p == pytest.approx(63001 / 65536, abs=1e-12)
    assert p >= 0.95


def test_grover_half_stays_half():
    spec = SearchSpec(4, tuple(range(8)))
    assert success_probability_of(run_grover(spec, 1), spec.targets) == pytest.approx(0.5, abs=1e-12)


def test_grover_negative_k():
    with pytest.raises(ValueError):
        build_grover(SearchSpec(2, (1,)), -1)


@pytest.mark.parametrize("k", [0, 1, 5])
def test_grover_gate_count(k):
    spec = SearchSpec(4, (1, 6, 9))
    c = build_grover(spec, k)
    assert len(c) == 4 + k * (len(build_oracle(spec)) + len(build_diffusion(4)))


@settings(max_examples=30, deadline=None)
@given(target_sets(max_n=6), st.integers(0, 12))
def test_global_phase_and_uniformity(case, k):
    n, targets = case
    spec = SearchSpec(n, tuple(targets))
    amps = run_grover(spec, k).amplitudes
    mask = np.zeros(1 << n, dtype=bool)
    mask[list(targets)] = True
    M, N = spec.M, spec.N

    tk = theta(N, M) * (1 + 2 * k)
    expected = np.empty(N)
    expected[mask] = np.sin(tk) / np.sqrt(M)
    if M < N:
        expected[~mask] = np.cos(tk) / np.sqrt(N - M)
    expected *= (-1) ** k
    assert np.max(np.abs(amps - expected)) < 1e-9

    assert np.ptp(amps[mask]) < 1e-10
    if M < N:
        assert np.ptp(amps[~mask]) < 1e-10


def test_to_matrix_empty_and_mcz():
    np.testing.assert_array_equal(to_matrix(Circuit(3)), np.eye(8))
    np.testing.assert_array_equal(to_matrix(Circuit(2, [MCZ])), np.diag([1, 1, 1, -1]))


def test_to_matrix_oracle_squared():
    o = build_oracle(SearchSpec(3, (0, 3, 6)))
    assert np.max(np.abs(to_matrix(o + o) - np.eye(8))) < 1e-10


@pytest.mark.parametrize("n", [1, 3, 5])
def test_to_matrix_unitary(n):
    u = to_matrix(build_grover(SearchSpec(n, (0,)), 2))
    assert np.max(np.abs(u.conj().T @ u - np.eye(1 << n))) < 1e-10


def test_to_matrix_size_error():
    with pytest.raises(SizeError):
        to_matrix(Circuit(11))


def test_dump_format_and_parse():
    c = build_single_oracle(2, 0b10)
    assert c.dump() == "X q0\nMCZ\nX q0\n"
    assert Circuit.parse(2, c.dump()) == c
    full = build_grover(SearchSpec(3, (1, 2)), 2)
    assert Circuit.parse(3, full.dump()) == full


def test_gate_validation():
    with pytest.raises(IndexError):
        Circuit(2, [H(2)])
    assert Circuit(2, [MCZ]).gates[0].kind is GateKind.MCZ


def test_search_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(2, ())
    with pytest.raises(ValueError):
        SearchSpec(2, (1, 1))
    with pytest.raises(IndexError):
        SearchSpec(2, (4,))
    with pytest.raises(SizeError):
        SearchSpec(0, (0,))
    with pytest.raises(ValueError):
        SearchSpec.from_bitstrings(["101", "11"])


def test_search_spec_bitstrings_ket_order():
    spec = SearchSpec.from_bitstrings(["1101", "0001"])
    assert spec.targets == (1, 13)
    assert spec.bitstrings == ["0001", "1101"]
    assert (spec.N, spec.M, spec.n) == (16, 2, 4)


def test_search_spec_random_is_seeded():
    a = SearchSpec.random(5, 7, seed=3)
    assert a == SearchSpec.random(5, 7, seed=3)
    assert a.M == 7
