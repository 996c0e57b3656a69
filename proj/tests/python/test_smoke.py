"""Smoke tests of the python bindings over the main operations."""

import json
import math
import os

import pytest

import holobraid as hb

DATA = os.environ.get("HOLOBRAID_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def load(name):
    with open(os.path.join(DATA, name)) as fh:
        return hb.parse_fourier(fh.read())


def test_word_roundtrip_and_algebra():
    w = hb.parse_word("n=3 1 -2 1")
    assert str(w) == "n=3 1 -2 1"
    assert hb.exponent_sum(w) == 1
    assert hb.invert(hb.invert(w)) == w
    assert hb.free_reduce(hb.compose(w, hb.invert(w))).letters == []
    with pytest.raises(hb.ParseError):
        hb.parse_word("n=3 9")


def test_normal_form_and_word_problem():
    a = hb.BraidWord(3, [1, 2, 1])
    b = hb.BraidWord(3, [2, 1, 2])
    assert hb.words_equal(a, b)
    nf = hb.left_normal_form(a)
    assert nf.inf == 1 and nf.canonical_length() == 0
    assert str(hb.left_normal_form(hb.BraidWord(3, [-1]))) == "Δ^-1 | 1 2"


def test_summit_and_conjugacy():
    s1 = hb.BraidWord(3, [1])
    s2 = hb.BraidWord(3, [2])
    sset = hb.summit_set(hb.BraidWord(3, [1, 1]))
    assert len(sset) == 2
    witness = hb.conjugate_test(s1, s2)
    assert witness is not None
    conj = hb.compose(hb.compose(hb.invert(witness), s1), witness)
    assert hb.words_equal(conj, s2)
    assert hb.conjugate_test(hb.BraidWord(3, [1, 2]), hb.BraidWord(3, [1, 1])) is None


def test_holonomic_pipeline_and_certificates():
    w = hb.BraidWord(3, [-1, 2, 1])
    h = hb.holonomize(w)
    assert h.negative_part.all_negative() and h.positive_part.all_positive()
    assert hb.words_equal(hb.open_word(h), w)
    form, cert = hb.holonomic_summit(h)
    assert hb.verify_certificate(cert).ok
    nf = hb.left_normal_form(hb.open_word(form))
    assert nf.inf == hb.summit_form(w).form.inf

    up = hb.markov_stabilize(h, +1)
    assert up.strands == 4
    down = hb.markov_destabilize(up)
    assert hb.left_normal_form(hb.open_word(down)) == hb.left_normal_form(hb.open_word(h))

    text = str(cert)
    again = hb.parse_certificate(text)
    assert hb.verify_certificate(again).ok


def test_curve_engine_reproduces_figures():
    fig5 = load("fig5_trefoil.json")
    rep = hb.genericity_report(fig5)
    assert rep.all_pass()
    assert rep.braid_index == 2
    word = hb.extract_braid(fig5)
    assert word.strands == 2
    assert sorted(word.letters) == [1, 1, 1]

    fig3 = load("fig3_winding.json")
    rep3 = hb.genericity_report(fig3)
    assert not rep3.zero_balance.pass_
    with pytest.raises(hb.NoSeparatingPointError):
        hb.braid_axis_point(fig3)

    plus = load("fig2_plus.json")
    assert hb.extract_braid(plus).letters == [-1]


def test_legendrian_cousins():
    fig5 = load("fig5_trefoil.json")
    params = hb.CousinParams(1, fig5)
    samples = hb.sample_cousin(params, 4096)
    assert hb.tangency_residual(samples, hb.ContactForm.Alpha) < 1e-9
    d = hb.front_diagram(params)
    assert len(d.crossings) == 3
    assert all(c.sign == -1 for c in d.crossings)
    assert len(d.cusps) == 4

    cos = load("cos.json")
    for s in (0.0, 0.5, 1.0):
        ds = hb.sample_dasbach(cos, 1, 2, s, 2048)
        assert hb.tangency_residual(ds, hb.ContactForm.Alpha) < 1e-9
    bad = hb.sample_dasbach(cos, 1, 2, 0.5, 2048, verbatim=True)
    assert hb.tangency_residual(bad, hb.ContactForm.Alpha) > 1e-6


def test_svg_and_csv_outputs():
    fig5 = load("fig5_trefoil.json")
    svg = hb.render_projection_svg(fig5)
    assert svg.startswith("<svg") and svg.count("<path") == 3
    front = hb.render_front_svg(hb.CousinParams(1, fig5))
    assert front.count("<circle") == 4
    csv = hb.curve_csv(fig5, 64)
    assert csv.splitlines()[0] == "t,x,y,z"


def test_fourier_serialization_is_json():
    f = hb.FourierSeries(sin=[1.0, 4.0, 0.0, 1.0])
    doc = json.loads(hb.serialize_fourier(f))
    assert doc["sin"] == [1.0, 4.0, 0.0, 1.0]
    assert math.isclose(f(0.25), math.sin(0.25) + 4 * math.sin(0.5) + math.sin(1.0))
