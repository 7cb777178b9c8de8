"""End-to-end acceptance gate.

Each test checks one headline guarantee of the toolkit at its stated tolerance
and prints a single PASS/FAIL line (visible with pytest -s, or in the captured
output on failure). Tolerances here are contractual; do not loosen them.
"""

import numpy as np

from cvchannels import (
    AxisSpec,
    BETA_MINUS,
    EQUIVALENCE_BS_REFLECT,
    QuadraticHamiltonian,
    SweepSpec,
    attenuation_channel,
    beamsplitter_matrix,
    boundary_ppt_channel,
    boundary_ppt_extension,
    builtin_complement,
    check_uncertainty,
    circuit_frame_ppt_channel,
    coherent_information,
    coherent_information_via_purification,
    combined_ppt_attenuation_channel,
    combined_ppt_attenuation_dilation,
    compose_symplectic,
    constituent_inputs,
    evolve,
    is_symplectic,
    photon_number,
    physicality_spectrum,
    ppt_spectrum,
    render_csv,
    run_sweep,
    symplectic_eigenvalues,
    symplectic_form,
    two_mode_squeezer_matrix,
    apply,
    williamson,
    wired_input,
)

from ensembles import (
    random_channel_with_dilation,
    random_input_ensemble,
    random_state,
    random_symplectic,
)

SQ2 = np.sqrt(2.0)


def _verdict(label: str, ok: bool, detail: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")
    return ok


def test_boundary_spectrum_exact():
    ch = boundary_ppt_channel()
    expected = np.array([0.0, 0.0, 2.0 * SQ2, 2.0 * SQ2])
    dev = max(
        float(np.abs(np.sort(physicality_spectrum(ch)) - expected).max()),
        float(np.abs(np.sort(ppt_spectrum(ch)) - expected).max()),
    )
    assert _verdict(
        "boundary-spectrum",
        dev <= 1e-9,
        f"both test matrices match {{0, 0, 2*sqrt2, 2*sqrt2}} within {dev:.3e} (tol 1e-9)",
    )


def test_closed_form_extension():
    ch = boundary_ppt_channel()
    d = boundary_ppt_extension()
    J = symplectic_form(4)
    sym_dev = float(np.abs(d.S @ J @ d.S.T - J).max())
    x_dev = float(np.abs(d.S[:4, :4] - ch.X).max())
    y_dev = float(np.abs(d.S[:4, 4:] @ d.S[:4, 4:].T - ch.Y).max())
    ok = sym_dev <= 1e-10 and x_dev <= 1e-12 and y_dev <= 1e-12
    assert _verdict(
        "closed-form-extension",
        ok,
        f"symplectic defect {sym_dev:.3e} (tol 1e-10), induced X defect {x_dev:.3e}, Y defect {y_dev:.3e}",
    )


def test_activation_point_low():
    ch = combined_ppt_attenuation_channel()
    comp = builtin_complement("eq2_combined")
    res = coherent_information(ch, comp, wired_input(3.19))
    ok = abs(res.value - 0.05) <= 0.005 and abs(res.photon_number - 58.2) <= 1.0
    assert _verdict(
        "activation-point-c3.19",
        ok,
        f"{res.value:.6f} bits (target 0.05 +/- 0.005) at {res.photon_number:.2f} photons (target 58.2 +/- 1)",
    )


def test_activation_point_high():
    ch = combined_ppt_attenuation_channel()
    comp = builtin_complement("eq2_combined")
    res = coherent_information(ch, comp, wired_input(5.8))
    ok = abs(res.value - 0.06) <= 0.005 and 780.0 <= res.photon_number <= 830.0
    assert _verdict(
        "activation-point-c5.8",
        ok,
        f"{res.value:.6f} bits (target 0.06 +/- 0.005) at {res.photon_number:.2f} photons (target [780, 830])",
    )


def test_zero_capacity_sanity_suite():
    rng = np.random.default_rng(1905)
    worst = -np.inf
    cases = 0
    for ch, comp, modes in (
        (boundary_ppt_channel(), builtin_complement("eq1_ppt"), 2),
        (attenuation_channel(0.5), builtin_complement("attenuation(0.5)"), 1),
    ):
        for st in random_input_ensemble(rng, modes, 100):
            worst = max(worst, coherent_information(ch, comp, st).value)
            cases += 1
    for c in range(7):
        pair, single = constituent_inputs(float(c))
        worst = max(
            worst,
            coherent_information(boundary_ppt_channel(), builtin_complement("eq1_ppt"), pair).value,
            coherent_information(attenuation_channel(0.5), builtin_complement("attenuation(0.5)"), single).value,
        )
        cases += 2
    assert _verdict(
        "zero-capacity-sanity",
        worst <= 1e-9,
        f"max coherent information {worst:.3e} over {cases} inputs to both zero-capacity channels (tol 1e-9)",
    )


def test_frame_equivalence():
    primed = circuit_frame_ppt_channel()
    target = boundary_ppt_channel()
    S = two_mode_squeezer_matrix(BETA_MINUS)
    T = beamsplitter_matrix(0.5, reflect=EQUIVALENCE_BS_REFLECT)
    moved = compose_symplectic(primed, np.linalg.inv(S) @ T, S, negate=True)
    dev = max(float(np.abs(moved.X - target.X).max()), float(np.abs(moved.Y - target.Y).max()))
    assert _verdict(
        "frame-equivalence",
        dev <= 1e-9 and EQUIVALENCE_BS_REFLECT,
        f"squeezer + reflected 50% beamsplitter move the circuit-frame channel onto the boundary "
        f"channel within {dev:.3e} (tol 1e-9)",
    )


def test_two_path_agreement():
    ch = combined_ppt_attenuation_channel()
    comp = builtin_complement("eq2_combined")
    dil = combined_ppt_attenuation_dilation()
    worst = 0.0
    for c in np.linspace(0.0, 6.0, 61):
        st = wired_input(float(c))
        direct = coherent_information(ch, comp, st).value
        pure = coherent_information_via_purification(ch, dil, st).value
        worst = max(worst, abs(direct - pure))

    rng = np.random.default_rng(7171)
    pairs = 0
    while pairs < 50:
        rch, rcomp, rdil = random_channel_with_dilation(rng)
        st = random_state(rng, rch.input_modes)
        direct = coherent_information(rch, rcomp, st).value
        pure = coherent_information_via_purification(rch, rdil, st).value
        worst = max(worst, abs(direct - pure))
        pairs += 1
    assert _verdict(
        "two-path-agreement",
        worst <= 1e-8,
        f"direct vs purified coherent information differ by at most {worst:.3e} "
        f"over the 61-point activation grid and {pairs} random circuit/input pairs (tol 1e-8)",
    )


def test_property_suites():
    rng = np.random.default_rng(40_75)

    spectra_dev = 0.0
    for _ in range(20):
        modes = int(rng.integers(1, 4))
        st = random_state(rng, modes)
        S = random_symplectic(rng, modes)
        a = symplectic_eigenvalues(st)
        b = symplectic_eigenvalues(S @ st.gamma @ S.T)
        spectra_dev = max(spectra_dev, float(np.abs(a - b).max() / max(1.0, a.max())))
    ok_spectra = spectra_dev <= 1e-8

    ok_uncertainty = True
    for _ in range(20):
        ch, _, _ = random_channel_with_dilation(rng)
        st = random_state(rng, ch.input_modes)
        ok_uncertainty &= check_uncertainty(apply(ch, st))

    williamson_dev = 0.0
    for _ in range(20):
        st = random_state(rng, int(rng.integers(1, 4)))
        S, lam = williamson(st)
        D = np.diag(np.repeat(lam, 2))
        scale = max(1.0, float(np.abs(st.gamma).max()))
        williamson_dev = max(williamson_dev, float(np.abs(S @ st.gamma @ S.T - D).max() / scale))
    ok_williamson = williamson_dev <= 1e-8

    group_dev = 0.0
    for _ in range(10):
        modes = int(rng.integers(1, 4))
        M = rng.normal(size=(2 * modes, 2 * modes))
        M = (M + M.T) / np.linalg.norm(M + M.T, 2)
        H = QuadraticHamiltonian(M)
        t1, t2 = rng.uniform(-1.0, 1.0, size=2)
        lhs = evolve(H, t1) @ evolve(H, t2)
        group_dev = max(group_dev, float(np.abs(lhs - evolve(H, t1 + t2)).max()))
        ok_symplectic_flow = is_symplectic(evolve(H, t1), 1e-9)
    ok_group = group_dev <= 1e-9 and ok_symplectic_flow

    spec = SweepSpec("eq3-c-sweep", (AxisSpec("c", 0.0, 6.0, 13),))
    first = render_csv(run_sweep(spec, threads=1), ("c",))
    rerun = render_csv(run_sweep(spec, threads=1), ("c",))
    threaded = render_csv(run_sweep(spec, threads=4), ("c",))
    ok_determinism = first == rerun == threaded

    ok = ok_spectra and ok_uncertainty and ok_williamson and ok_group and ok_determinism
    assert _verdict(
        "property-suites",
        ok,
        "spectra invariance "
        + ("ok" if ok_spectra else f"FAIL ({spectra_dev:.2e})")
        + ", uncertainty preservation "
        + ("ok" if ok_uncertainty else "FAIL")
        + f", normal-form round-trip {'ok' if ok_williamson else f'FAIL ({williamson_dev:.2e})'}"
        + f", evolution group law {'ok' if ok_group else f'FAIL ({group_dev:.2e})'}"
        + f", sweep determinism {'ok' if ok_determinism else 'FAIL'}",
    )
