import math

import numpy as np
import pytest

from qtst import (
    Isotope,
    apparent_arrhenius,
    classify,
    kie_qtst,
    load_barrier_frequencies,
    load_limits,
    load_table1,
    swain_schaad,
)
from qtst.errors import BelowCrossoverError, DomainError

KB_KJ = 1.380649e-23 * 6.02214076e23 / 1000.0


# ------------------------------------------------------------- kie_qtst


def test_kie_spot_value_frozen_oracle():
    # independently evaluated at 40-digit precision before freezing
    pred = kie_qtst(3000.0, 1000.0, 300.0, Isotope.H, Isotope.D)
    assert pred.ratio == pytest.approx(17.047042665710686, rel=1e-12)
    assert pred.valid
    pred_ht = kie_qtst(3000.0, 1000.0, 300.0, Isotope.H, Isotope.T)
    assert pred_ht.ratio == pytest.approx(52.600212604025088, rel=1e-12)


def test_kie_same_isotope_is_unity():
    assert kie_qtst(3000.0, 1000.0, 300.0, Isotope.D, Isotope.D).ratio == 1.0


def test_kie_low_frequency_limit():
    # with both frequencies tiny the sinh and sin ratios go to their
    # frequency-ratio limits and the expression tends to sqrt(m_h/m_l),
    # the attempt-frequency ratio of the rate prefactors
    pred = kie_qtst(1e-6, 1e-6, 300.0, Isotope.H, Isotope.D)
    assert pred.ratio == pytest.approx(math.sqrt(2.0), rel=1e-9)


def test_kie_below_crossover_names_isotope():
    t0_h = 0.22898845206107345 * 1000.0
    with pytest.raises(BelowCrossoverError) as err:
        kie_qtst(3000.0, 1000.0, 0.99 * t0_h, Isotope.H, Isotope.D)
    assert "H" in str(err.value)


def test_kie_validity_gate_uses_light_isotope():
    # 235 K is below H's crossover (229 K * 1.05 margin aside) but above
    # D's; the light isotope binds
    t0_h = 0.22898845206107345 * 1000.0
    pred = kie_qtst(3000.0, 1000.0, 1.01 * t0_h, Isotope.H, Isotope.D)
    assert not pred.valid  # inside the 5% fringe
    assert kie_qtst(3000.0, 1000.0, 1.2 * t0_h, Isotope.H, Isotope.D).valid


def test_kie_ratio_chain_identity():
    hd = kie_qtst(3000.0, 1000.0, 305.0, Isotope.H, Isotope.D).ratio
    dt = kie_qtst(3000.0, 1000.0, 305.0, Isotope.D, Isotope.T).ratio
    ht = kie_qtst(3000.0, 1000.0, 305.0, Isotope.H, Isotope.T).ratio
    assert ht == pytest.approx(hd * dt, rel=1e-12)


def test_kie_exceeds_unity_and_decreases_with_temperature():
    t0_h = 0.22898845206107345 * 1000.0
    values = [
        kie_qtst(3000.0, 1000.0, float(T), Isotope.H, Isotope.D).ratio
        for T in np.linspace(1.1 * t0_h, 400.0, 25)
    ]
    assert all(v >= 1.0 for v in values)
    assert all(a > b for a, b in zip(values, values[1:]))


def test_kie_rejects_inverted_pair():
    with pytest.raises(DomainError):
        kie_qtst(3000.0, 1000.0, 300.0, Isotope.T, Isotope.H)


# ---------------------------------------------------- apparent Arrhenius


def test_apparent_arrhenius_reference_values_H_T():
    res = apparent_arrhenius(3000.0, 1000.0, 288.0, Isotope.H, Isotope.T)
    assert res.delta_E_kJ_per_mol == pytest.approx(16.0, abs=0.5)
    assert res.a_ratio == pytest.approx(0.08, abs=0.015)
    assert res.expansion_ok


def test_apparent_arrhenius_reference_values_D_T():
    res = apparent_arrhenius(3000.0, 1000.0, 288.0, Isotope.D, Isotope.T)
    assert res.delta_E_kJ_per_mol == pytest.approx(3.6, abs=0.2)
    assert res.a_ratio == pytest.approx(0.70, abs=0.05)


def test_apparent_arrhenius_frozen_oracles():
    res = apparent_arrhenius(3000.0, 1000.0, 288.0, Isotope.H, Isotope.T)
    assert res.a_ratio == pytest.approx(0.08509207943, rel=1e-9)
    assert res.delta_E_kJ_per_mol == pytest.approx(16.0022786, rel=1e-8)


def test_apparent_arrhenius_same_isotope_trivial():
    res = apparent_arrhenius(3000.0, 1000.0, 288.0, Isotope.D, Isotope.D)
    assert res.a_ratio == 1.0 and res.delta_E_kJ_per_mol == 0.0


def test_apparent_arrhenius_expansion_flag():
    # a soft mode violates hbar*omega0 >> 2 kB T_R for the heavy isotope
    res = apparent_arrhenius(900.0, 200.0, 300.0, Isotope.H, Isotope.T)
    assert not res.expansion_ok


def test_apparent_arrhenius_below_crossover_raises():
    with pytest.raises(BelowCrossoverError):
        apparent_arrhenius(3000.0, 1500.0, 300.0, Isotope.H, Isotope.D)


def test_apparent_arrhenius_continuous_in_reference_temperature():
    values = [
        apparent_arrhenius(3000.0, 1000.0, float(t), Isotope.H, Isotope.T).delta_E_kJ_per_mol
        for t in np.linspace(280.0, 320.0, 41)
    ]
    steps = np.abs(np.diff(values))
    assert np.all(steps < 0.2)  # smooth drift, ~0.15 kJ/mol per kelvin here


def test_apparent_arrhenius_matches_local_log_derivative():
    # central finite differences of ln KIE vs 1/T reproduce delta_E within
    # 2% over the physiological window (expansion self-consistency)
    for T_R in (280.0, 300.0, 320.0):
        h = 1e-3
        k_plus = kie_qtst(3000.0, 1000.0, 1.0 / (1.0 / T_R + h / T_R**2), Isotope.H, Isotope.D).ratio
        k_minus = kie_qtst(3000.0, 1000.0, 1.0 / (1.0 / T_R - h / T_R**2), Isotope.H, Isotope.D).ratio
        dlnk_dinvT = (math.log(k_plus) - math.log(k_minus)) / (2.0 * h / T_R**2)
        delta_E_fd = dlnk_dinvT * KB_KJ
        delta_E = apparent_arrhenius(3000.0, 1000.0, T_R, Isotope.H, Isotope.D).delta_E_kJ_per_mol
        assert delta_E_fd == pytest.approx(delta_E, rel=0.02)


# ----------------------------------------------------------- swain-schaad


def test_swain_schaad_equal_logs():
    assert swain_schaad(math.e * 2.0, math.e * 2.0, 2.0) == pytest.approx(1.0, rel=1e-14)


def test_swain_schaad_semiclassical_value():
    # unit prefactors, zero-point-only activation energies
    x = 7.0  # hbar*omega0/(2 kB T), arbitrary
    kH_over_kT = math.exp(x * (1.0 - 1.0 / math.sqrt(3.0)))
    kD_over_kT = math.exp(x * (1.0 / math.sqrt(2.0) - 1.0 / math.sqrt(3.0)))
    assert swain_schaad(kH_over_kT, kD_over_kT, 1.0) == pytest.approx(3.2572525594, rel=1e-9)


def test_swain_schaad_hand_arithmetic():
    assert swain_schaad(81.0, 3.85, 1.0) == pytest.approx(math.log(81.0) / math.log(3.85), rel=1e-14)


def test_swain_schaad_degenerate_denominator():
    with pytest.raises(DomainError):
        swain_schaad(3.0, 2.0, 2.0)
    with pytest.raises(DomainError):
        swain_schaad(-1.0, 2.0, 1.0)


# -------------------------------------------------------------- classify


def test_classify_methylmalonyl_row_triggers_all_criteria():
    rep = classify(35.6, 0.082, 14.3, (Isotope.H, Isotope.D))
    assert rep.kim_kreevoy_flags == (True, True, True)
    assert rep.outside_bell_low and not rep.outside_bell_high


def test_classify_inside_every_limit():
    rep = classify(5.0, 1.0, 2.0, (Isotope.H, Isotope.D))
    assert rep.kim_kreevoy_flags == (False, False, False)
    assert not rep.outside_bell_low and not rep.outside_bell_high


def test_classify_lipoxygenase_prefactor_above_bell_window():
    rep = classify(81.0, 18.0, 3.8, "H:D")
    assert rep.outside_bell_high and not rep.outside_bell_low


def test_classify_ht_window():
    rep = classify(22.0, 0.13, 13.0, (Isotope.H, Isotope.T))
    assert rep.outside_bell_low  # 0.13 < 0.3
    assert rep.pair == "HT"


def test_classify_unsupported_pair():
    with pytest.raises(DomainError):
        classify(10.0, 1.0, 1.0, (Isotope.T, Isotope.T))


# ---------------------------------------------------------- bundled data


def test_limits_file_contents():
    limits = load_limits()
    assert limits["schema"] == "qtst/1"
    assert limits["kim_kreevoy"]["kie_hd_min"] == 6.4
    assert limits["kim_kreevoy"]["delta_E_kJ_per_mol_min"] == 5.0
    assert limits["kim_kreevoy"]["a_ratio_hd_max"] == 0.7
    assert limits["bell_prefactor_ranges"]["ranges"]["HT"] == [0.3, 1.7]
    assert limits["bell_prefactor_ranges"]["ranges"]["DT"] == [0.5, 1.4]
    # the zero-point formula value differs from the tabulated limit row;
    # both ship, clearly labelled
    assert limits["zero_point_formula"]["delta_E_HD_kJ_per_mol"] == pytest.approx(
        0.5 * 3000.0 * 0.011962656563869701 * (1 - 1 / math.sqrt(2)), abs=2e-4
    )
    assert limits["semiclassical_limit_rows"]["HD"]["delta_E_kJ_per_mol_max"] == 3.1


def test_table1_rows_complete_and_typed():
    rows = load_table1()
    assert len(rows) >= 30
    byname = {r["name"]: r for r in rows}
    mm = byname["Methylmalonyl-CoA mutase"]
    assert mm["kie"] == 35.6 and mm["kie_err"] == 2.4 and mm["pair"] == "HD"
    mao = byname["Flavoenzyme monoamine oxidase"]
    assert mao["pair"] == "HT" and mao["a_ratio"] == 0.13 and mao["delta_E"] == 13
    assert all(r["pair"] in ("HD", "HT") for r in rows)


def test_barrier_frequency_table():
    rows = load_barrier_frequencies()
    assert any(r["omega_b_cm1"] == 2913 for r in rows)  # soybean lipoxygenase
    assert all(r["omega_b_cm1"] > 0 and r["max_T0_K"] > 0 for r in rows)
