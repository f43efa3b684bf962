"""Smoke tests for the python bindings.

The heavy numerical checks live in the C++ suites; here we only verify that
the module loads, the main operations run end to end, and values round-trip
across the language boundary.
"""

import math

import pytest

import twinbeam as tb


V7 = 10.0 ** (-0.7)


def symmetric_scenario():
    cfg = tb.ScenarioConfig()
    cfg.input1 = tb.SqueezerSpec(V7)
    cfg.input2 = tb.SqueezerSpec(V7)
    return cfg


def test_criteria_on_symmetric_scenario():
    cm = tb.build_scenario(symmetric_scenario())
    insep = tb.inseparability(cm)
    assert insep.value == pytest.approx(0.19952623149688796, abs=1e-12)
    assert insep.pairing == tb.InseparabilityPairing.sum_plus_diff_minus

    eps = tb.epr_value(cm, tb.Direction.x_given_y)
    assert eps.value == pytest.approx(0.14728259001091531, abs=1e-12)
    assert cm[0, 0] == pytest.approx(2.6056992838848054, abs=1e-12)


def test_closed_forms_match_engine():
    cfg = symmetric_scenario()
    cfg.eta_x = 0.8
    cfg.eta_y = 0.8
    cm = tb.build_scenario(cfg)
    assert tb.inseparability(cm).value == pytest.approx(
        tb.inseparability_symmetric_closed_form(V7, 0.8), rel=1e-12
    )


def test_inference_round_trip():
    v1 = tb.squeezer_output(tb.SqueezerSpec(0.3, 0.7))
    cm = tb.mix_on_beamsplitter(v1, tb.VariancePair(1.0, 1.0), 0.6)
    beam_x = tb.VariancePair(
        cm.var(tb.Mode.x, tb.Quadrature.plus),
        cm.var(tb.Mode.x, tb.Quadrature.minus),
    )
    beam_y = tb.VariancePair(
        cm.var(tb.Mode.y, tb.Quadrature.plus),
        cm.var(tb.Mode.y, tb.Quadrature.minus),
    )
    r = tb.infer_inputs(beam_x, beam_y, 0.6)
    assert r.v0_plus == pytest.approx(0.3, abs=1e-10)
    assert r.eta_1 == pytest.approx(0.7, abs=1e-10)
    assert not r.vacuum_degenerate


def test_inference_rejects_contradictory_beams():
    with pytest.raises(RuntimeError):
        tb.infer_inputs(
            tb.VariancePair(0.8, 1.2), tb.VariancePair(0.7, 1.3), 0.6
        )


def test_filter_response_and_bandwidth():
    spec = tb.BandPassSpec(4.45e6, 0.9e6)
    filt = tb.design_butterworth_bandpass(spec, 1.0e7)
    assert abs(filt.response(4.0e6)) == pytest.approx(1 / math.sqrt(2), abs=1e-9)
    assert abs(filt.response(4.9e6)) == pytest.approx(1 / math.sqrt(2), abs=1e-9)
    assert filt.noise_bandwidth_fraction() == pytest.approx(
        0.186401144777, abs=1e-9
    )
    assert filt.sample_rate_hz == 1.0e7


def test_validation_maps_to_value_error():
    with pytest.raises(ValueError):
        tb.db_to_variance(float("nan"))
    with pytest.raises(ValueError):
        tb.design_butterworth_bandpass(tb.BandPassSpec(4.45e6, 0.9e6, 5), 1.0e7)


def test_sampling_is_deterministic():
    cm = tb.build_scenario(symmetric_scenario())
    a = tb.sample_pairs(cm, 0.0, 64, 7)
    b = tb.sample_pairs(cm, 0.0, 64, 7)
    assert a.x == b.x and a.y == b.y
    c = tb.sample_pairs(cm, 0.0, 64, 8)
    assert a.x != c.x


def test_estimate_tracks_analytic_value():
    cm = tb.build_scenario(symmetric_scenario())
    plus = tb.sample_pairs(cm, 0.0, 5000, 3)
    minus = tb.sample_pairs(cm, math.pi / 2, 5000, 4)
    rep = tb.estimate(plus, minus)
    truth = tb.inseparability(cm).value
    pull = abs(rep.inseparability.value - truth) / rep.inseparability.std_error
    assert pull < 5.0
    assert rep.n == 5000


def test_preset_catalog():
    assert tb.preset_names() == ["fig7", "fig10", "fig11", "fig12", "fig14"]
    p = tb.preset("fig14")
    assert p.config.sampler.n == 1000000
    assert p.sweep_defaults.parameter == tb.SweepParameter.t
    with pytest.raises(ValueError):
        tb.preset("fig9")
