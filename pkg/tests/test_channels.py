import numpy as np
import pytest

from cvchannels import (
    CovarianceMatrix,
    GaussianChannel,
    ShapeError,
    apply,
    apply_partial,
    attenuation_channel,
    boundary_ppt_channel,
    check_uncertainty,
    circuit_frame_ppt_channel,
    combined_ppt_attenuation_channel,
    compose,
    compose_symplectic,
    identity_channel,
    permute_modes,
    physicality_spectrum,
    ppt_check,
    ppt_spectrum,
    resolve_channel,
    tensor,
    validate_channel,
)

from ensembles import (
    random_channel_with_dilation,
    random_state,
    random_symplectic,
)

SQ2 = np.sqrt(2.0)
BOUNDARY_SPECTRUM = np.array([0.0, 0.0, 2.0 * SQ2, 2.0 * SQ2])


def test_boundary_channel_matrices():
    ch = boundary_ppt_channel()
    want_X = np.array(
        [
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ]
    )
    assert np.array_equal(ch.X, want_X)
    assert np.array_equal(ch.Y, SQ2 * np.eye(4))
    assert ch.input_modes == 2 and ch.output_modes == 2
    assert ch.name == "eq1_ppt"


def test_boundary_channel_spectra():
    ch = boundary_ppt_channel()
    for spec in (physicality_spectrum(ch), ppt_spectrum(ch)):
        assert np.abs(np.sort(spec) - BOUNDARY_SPECTRUM).max() < 1e-9
        # exactly two zero eigenvalues: the channel sits on the PPT boundary
        assert np.sum(np.abs(spec) < 1e-9) == 2
    verdict = ppt_check(ch)
    assert verdict.is_ppt
    assert abs(verdict.min_eigenvalue) < 1e-9


def test_circuit_frame_channel_spectra():
    ch = circuit_frame_ppt_channel()
    assert validate_channel(ch)
    assert ppt_check(ch).is_ppt
    # same channel up to unitaries; its test spectra are {0, 0, 2, 6}
    want = np.array([0.0, 0.0, 2.0, 6.0])
    assert np.abs(np.sort(physicality_spectrum(ch)) - want).max() < 1e-9
    assert np.abs(np.sort(ppt_spectrum(ch)) - want).max() < 1e-9


def test_validate_basics():
    assert validate_channel(identity_channel(2))
    bad = GaussianChannel(np.eye(2), -np.eye(2))
    assert not validate_channel(bad)


def test_attenuation_family():
    with pytest.raises(ValueError):
        attenuation_channel(-0.1)
    with pytest.raises(ValueError):
        attenuation_channel(1.1)
    for t in np.linspace(0.0, 1.0, 11):
        ch = attenuation_channel(float(t))
        assert np.allclose(ch.X, np.sqrt(1.0 - t) * np.eye(2))
        assert np.allclose(ch.Y, t * np.eye(2))
        assert validate_channel(ch)
        # PPT test matrix t*I + i(2-t)J has eigenvalues {2t-2, 2}
        verdict = ppt_check(ch)
        assert verdict.min_eigenvalue == pytest.approx(2.0 * t - 2.0, abs=1e-12)
        assert verdict.is_ppt == (t >= 1.0 - 1e-9)
    assert ppt_check(attenuation_channel(0.5)).min_eigenvalue == pytest.approx(-1.0, abs=1e-12)


def test_combined_channel_blocks():
    ch = combined_ppt_attenuation_channel()
    assert ch.input_modes == 3 and ch.output_modes == 3
    assert np.array_equal(ch.X[:4, :4], boundary_ppt_channel().X)
    assert np.allclose(ch.X[4:, 4:], (1.0 / SQ2) * np.eye(2))
    assert np.abs(ch.X[:4, 4:]).max() == 0.0
    assert np.array_equal(ch.Y[:4, :4], SQ2 * np.eye(4))
    assert np.allclose(ch.Y[4:, 4:], 0.5 * np.eye(2))
    assert validate_channel(ch)
    assert not ppt_check(ch).is_ppt  # the attenuation arm is not PPT


def test_apply_matches_affine_map(rng):
    ch, _, _ = random_channel_with_dilation(rng)
    st = random_state(rng, ch.input_modes)
    st = CovarianceMatrix(st.gamma, rng.normal(size=2 * ch.input_modes))
    out = apply(ch, st)
    assert np.allclose(out.gamma, ch.X @ st.gamma @ ch.X.T + ch.Y)
    assert np.allclose(out.d, ch.X @ st.d)
    with pytest.raises(ShapeError):
        apply(ch, random_state(rng, ch.input_modes + 1))


def test_apply_preserves_uncertainty(rng):
    for _ in range(10):
        ch, _, _ = random_channel_with_dilation(rng)
        st = random_state(rng, ch.input_modes)
        assert check_uncertainty(apply(ch, st))


def test_tensor_respects_apply(rng):
    ch1 = attenuation_channel(0.3)
    ch2 = boundary_ppt_channel()
    st1 = random_state(rng, 1)
    st2 = random_state(rng, 2)
    joint_in = CovarianceMatrix(
        np.block(
            [
                [st1.gamma, np.zeros((2, 4))],
                [np.zeros((4, 2)), st2.gamma],
            ]
        )
    )
    joint_out = apply(tensor(ch1, ch2), joint_in)
    out1 = apply(ch1, st1)
    out2 = apply(ch2, st2)
    assert np.allclose(joint_out.gamma[:2, :2], out1.gamma)
    assert np.allclose(joint_out.gamma[2:, 2:], out2.gamma)
    assert np.abs(joint_out.gamma[:2, 2:]).max() < 1e-12


def test_compose_law():
    a = attenuation_channel(0.3)
    b = attenuation_channel(0.4)
    seq = compose(b, a)
    # losses compound: 1 - (1-t1)(1-t2)
    expect = attenuation_channel(1.0 - (1.0 - 0.3) * (1.0 - 0.4))
    assert np.abs(seq.X - expect.X).max() < 1e-12
    assert np.abs(seq.Y - expect.Y).max() < 1e-12
    with pytest.raises(ShapeError):
        compose(boundary_ppt_channel(), attenuation_channel(0.5))


def test_compose_symplectic_identity_and_invariance(rng):
    ch = boundary_ppt_channel()
    same = compose_symplectic(ch, np.eye(4), np.eye(4))
    assert np.array_equal(same.X, ch.X) and np.array_equal(same.Y, ch.Y)

    for _ in range(5):
        S_in = random_symplectic(rng, 2)
        S_out = random_symplectic(rng, 2)
        moved = compose_symplectic(ch, S_in, S_out, negate=bool(rng.integers(2)))
        assert validate_channel(moved) == validate_channel(ch)
        # output conjugation alone never changes the PPT verdict
        out_only = compose_symplectic(ch, np.eye(4), S_out)
        assert ppt_check(out_only).is_ppt == ppt_check(ch).is_ppt


def test_compose_symplectic_shape_guards():
    ch = attenuation_channel(0.5)
    with pytest.raises(ShapeError):
        compose_symplectic(ch, np.eye(4), np.eye(2))
    with pytest.raises(ShapeError):
        compose_symplectic(ch, np.eye(2), np.eye(4))


def test_apply_partial_square_channel(rng):
    st = random_state(rng, 3)
    ch = attenuation_channel(0.25)
    out = apply_partial(ch, st, [1])
    # manual route: permute target last, act on the tail, permute back
    moved = permute_modes(st, [0, 2, 1])
    acted = apply(tensor(identity_channel(2), ch), moved)
    want = permute_modes(acted, [0, 2, 1])
    assert np.allclose(out.gamma, want.gamma)
    assert np.allclose(out.d, want.d)
    # untouched blocks stay identical
    assert np.array_equal(out.gamma[np.ix_([0, 1, 4, 5], [0, 1, 4, 5])], st.gamma[np.ix_([0, 1, 4, 5], [0, 1, 4, 5])])


def test_apply_partial_non_square_orders_rest_first(rng):
    st = random_state(rng, 2)
    erase = GaussianChannel(np.zeros((0, 2)), np.zeros((0, 0)))  # trace out one mode
    out = apply_partial(erase, st, [0])
    assert out.modes == 1
    assert np.allclose(out.gamma, st.gamma[2:, 2:])
    with pytest.raises(ValueError):
        apply_partial(erase, st, [2])
    with pytest.raises(ValueError):
        apply_partial(erase, st, [0, 1])


def test_resolve_channel_registry():
    assert resolve_channel("eq1_ppt").name == "eq1_ppt"
    assert resolve_channel("eq4_ppt_prime").name == "eq4_ppt_prime"
    assert resolve_channel("eq2_combined").name == "eq2_combined"
    att = resolve_channel("attenuation(0.25)")
    assert att.X[0, 0] == pytest.approx(np.sqrt(0.75))
    with pytest.raises(KeyError):
        resolve_channel("no_such_channel")
    with pytest.raises(ValueError):
        resolve_channel("attenuation(abc)")
    with pytest.raises(ValueError):
        resolve_channel("attenuation(1.5)")


def test_channel_shape_checks():
    with pytest.raises(ShapeError):
        GaussianChannel(np.eye(2), np.zeros((4, 4)))
    with pytest.raises(ShapeError):
        GaussianChannel(np.eye(2), np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ShapeError):
        GaussianChannel(np.zeros((2, 3)), np.zeros((2, 2)))
