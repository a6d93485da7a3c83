"""Specialization windows, trace inequalities, and recursive certificates."""

import json
import math

import pytest

from wpinterp import (
    CertificateError,
    UnsupportedWeightsError,
    Weights,
    build_certificate,
    certificate_from_json,
    certificate_to_json,
    chandler_inequality,
    check_certificate,
    count_monomials,
    numeric_facts_verify,
    teranum_verify,
    terracini_candidates,
)

W123 = Weights((1, 2, 3))


def test_candidates_satisfy_their_windows():
    # replay every returned window from the counting oracle
    for d in range(1, 31):
        s_d = count_monomials(W123, d)
        for r in range(1, math.ceil(s_d / 3) + 1):
            for cand in terracini_candidates(W123, d, r):
                idx = cand.index
                assert W123[idx] == cand.weight
                assert 1 <= cand.q <= r
                lo = 3 * r - count_monomials(W123, d - cand.weight)
                sbar = count_monomials(W123.drop(idx), d)
                nq = 2 * cand.q
                if cand.direction == "independent":
                    assert lo <= nq <= sbar
                else:
                    assert cand.direction == "fill"
                    assert sbar <= nq <= lo
                    assert not lo <= nq <= sbar  # overlaps are deduplicated


def test_candidates_require_unit_weight():
    with pytest.raises(UnsupportedWeightsError):
        terracini_candidates(Weights((2, 3, 5)), 10, 2)


def test_candidates_example_14_8():
    cands = terracini_candidates(W123, 14, 8)
    assert [(c.weight, c.q, c.direction) for c in cands] == [(3, 4, "independent")]


def test_candidates_empty_for_straight_plane_exception():
    assert terracini_candidates(Weights((1, 1, 1)), 4, 5) == []


def test_chandler_record_consistency():
    rec = chandler_inequality(W123, 14, 3, 4, 8)
    assert rec.ok
    assert rec.case in (1, 2)
    assert rec.d == 14 and rec.i == 3 and rec.q == 4 and rec.r == 8
    assert rec.s_d_minus_i == count_monomials(W123, 11)
    assert rec.s_d_minus_2i == count_monomials(W123, 8)
    assert rec.sbar_d == count_monomials(Weights((1, 2)), 14)
    ybar = rec.r - rec.q
    assert rec.h1 == min(rec.s_d_minus_i, 3 * ybar)
    assert rec.h2 == min(rec.s_d_minus_2i, 3 * ybar)
    if rec.case == 1:
        assert 3 * rec.r - 2 * rec.q <= rec.s_d_minus_i
        assert rec.h1 + rec.q <= rec.h2 + rec.sbar_d_minus_i


def test_chandler_vacuous_when_nothing_moves():
    rec = chandler_inequality(W123, 9, 2, 0, 4)
    assert rec.ok and rec.case == 0


def test_chandler_argument_checks():
    with pytest.raises(ValueError):
        chandler_inequality(W123, 10, 5, 1, 3)  # no variable of weight 5
    with pytest.raises(ValueError):
        chandler_inequality(W123, 10, 2, 4, 3)  # q > r


def test_certificate_example_trace():
    cert = build_certificate(W123, 14, 8)
    assert cert.kind == "terracini"
    assert (cert.choice.weight, cert.choice.q) == (3, 4)
    leaf, first, second = cert.children
    assert leaf.kind == "chandler-leaf"
    assert (first.d, first.r) == (11, 5)
    assert (first.choice.weight, first.choice.q) == (3, 3)
    assert (second.d, second.r) == (8, 4)
    # premise sizes walk the floor/ceil lattice of s_t/3
    prem = cert.witnesses["premises"]
    assert prem[0] == {"degree": 11, "required": 4, "certified": 5}
    assert prem[1] == {"degree": 8, "required": 4, "certified": 4}
    grandchild = first.children[1]
    assert (grandchild.d, grandchild.r) == (8, 3)
    assert check_certificate(cert)


def test_certificates_over_a_grid():
    for d in range(0, 19):
        s_d = count_monomials(W123, d)
        for r in range(0, math.ceil(s_d / 3) + 1):
            cert = build_certificate(W123, d, r)
            failures = []
            assert check_certificate(cert, failures), (d, r, failures)

            def assert_shape(node):
                if node.kind == "base":
                    assert node.d <= 5 or node.r == 0
                else:
                    assert node.kind in ("terracini", "chandler-leaf")
                for child in node.children:
                    assert_shape(child)

            assert_shape(cert)


def test_certificate_roundtrip_is_byte_stable():
    cert = build_certificate(W123, 14, 8)
    text = certificate_to_json(cert)
    again = certificate_to_json(certificate_from_json(text))
    assert text == again
    payload = json.loads(text)
    assert payload["schema"] == "wpinterp/certificate/v1"


def test_certificate_checker_rejects_tampering():
    cert = build_certificate(W123, 14, 8)
    payload = json.loads(certificate_to_json(cert))

    bad = json.loads(certificate_to_json(cert))
    bad["root"]["witnesses"]["s_d"] += 1
    failures = []
    assert not check_certificate(certificate_from_json(json.dumps(bad)), failures)
    assert failures

    bad = json.loads(certificate_to_json(cert))
    bad["root"]["choice"]["q"] = 5
    assert not check_certificate(certificate_from_json(json.dumps(bad)))

    bad = json.loads(certificate_to_json(cert))
    bad["root"]["children"][1]["d"] = 12
    assert not check_certificate(certificate_from_json(json.dumps(bad)))

    # the original still verifies
    assert check_certificate(certificate_from_json(json.dumps(payload)))


def test_certificate_rejects_other_weights():
    with pytest.raises(UnsupportedWeightsError):
        build_certificate(Weights((1, 1, 1)), 6, 3)
    with pytest.raises(ValueError):
        build_certificate(W123, -1, 2)


def test_certificate_base_cases():
    cert = build_certificate(W123, 4, 1)
    assert cert.kind == "base"
    assert cert.witnesses["actual"] == cert.witnesses["expected"]
    zero = build_certificate(W123, 9, 0)
    assert zero.kind == "base" and zero.r == 0


def test_teranum_scan():
    report = teranum_verify(6, 5000)
    assert report.ok
    assert report.checked > 0
    assert report.failures == ()
    with pytest.raises(ValueError):
        teranum_verify(4, 100)


def test_numeric_facts_scan():
    report = numeric_facts_verify(6, 5000)
    assert report.ok
    with pytest.raises(ValueError):
        numeric_facts_verify(2, 100)
