"""Quotient multigraph, voltage lifting, certificates and verification."""

import random
from dataclasses import replace

import pytest

from psl2ham import (certificate_to_text, lift_cycle, parse_certificate,
                     unroll_lift, verify_certificate)
from psl2ham.errors import InvariantViolation


def test_underlying_quotient_is_complete_k10(cache):
    for i in range(5):
        q = cache.quotient(61, i)
        for a in range(10):
            for b in range(10):
                if a != b:
                    assert q.mult[a][b] >= 2


def test_row_sums_equal_degree(cache):
    q = cache.quotient(61, 0)
    for a in range(10):
        assert sum(q.mult[a]) == 61


def test_multiplicities_symmetric_voltages_negated(cache):
    q = cache.quotient(61, 2)
    p = q.p
    for a in range(10):
        for b in range(10):
            assert q.mult[a][b] == q.mult[b][a]
            assert set(q.voltages[b][a]) == {(-w) % p for w in q.voltages[a][b]}


def test_voltages_realize_adjacency(cache, action61):
    # w in voltages[a][b] iff base(a) ~ sigma^w(base(b))
    from psl2ham import neighborhood
    q = cache.quotient(61, 0)
    orbits = action61.s_orbits
    nb = neighborhood(action61, 0, orbits[3][0])
    for b in range(10):
        hits = {w for w in range(q.p) if orbits[b][w] in nb}
        assert hits == set(q.voltages[3][b])


def expected_single_edge_pairs(i):
    """The crossing pairs that degenerate to a single edge over GF(81).

    Over GF(81) the tenth powers are exactly the GF(9) subfield's nonzero
    elements, and every one of those is a square in GF(81).  For crossing
    pairs (n, 5+j) with j - i + n = 0 (mod 5) the deciding equation
    theta*b^2 + c*y^10 = -1 then admits only b = 0 solutions, which
    collapse to a single group element: d = 1 instead of the generic >= 2.
    """
    pairs = set()
    for n in range(5):
        j = (i - n) % 5
        pairs.add((n, 5 + j))
        pairs.add((5 + j, n))
    return pairs


def test_quotient_structure_all_instances(cache):
    # underlying simple quotient is complete for every instance; the
    # double-edge property holds everywhere except the k=81 degeneracy
    for k in (61, 81, 121):
        for i in range(5):
            q = cache.quotient(k, i)
            assert q.p == (k + 1) // 2
            singles = set()
            for a in range(10):
                assert sum(q.mult[a]) == k
                for b in range(10):
                    if a == b:
                        continue
                    assert q.mult[a][b] >= 1
                    if q.mult[a][b] == 1:
                        singles.add((a, b))
            if k == 81:
                assert singles == expected_single_edge_pairs(i)
            else:
                assert singles == set()


def test_lift_produces_valid_certificate(cache):
    q = cache.quotient(61, 0)
    cert = lift_cycle(q)
    assert len(cert.vertices) == 310
    assert len(set(cert.vertices)) == 310
    assert cert.total_voltage % 31 != 0
    assert sum(cert.chosen_voltages) % 31 == cert.total_voltage
    for e in range(10):
        assert cert.chosen_voltages[e] in q.voltages[cert.cycle[e]][cert.cycle[(e + 1) % 10]]


def test_lift_rejects_bad_cycles(cache):
    q = cache.quotient(61, 0)
    with pytest.raises(ValueError):
        lift_cycle(q, cycle=(0, 1, 2, 3, 4, 5, 6, 7, 8, 8))
    with pytest.raises(ValueError):
        lift_cycle(q, cycle=(0, 1, 2))


def test_lift_dichotomy_random_assignments(cache):
    for k in (61, 81, 121):
        q = cache.quotient(k, 0)
        p = q.p
        rng = random.Random(k)
        cycle = tuple(range(10))
        edge_sets = [q.voltages[cycle[e]][cycle[(e + 1) % 10]] for e in range(10)]
        zero_seen = nonzero_seen = 0
        for _ in range(120):
            choices = [rng.choice(vs) for vs in edge_sets]
            total = sum(choices) % p
            comps = unroll_lift(q, cycle, choices)
            if total:
                nonzero_seen += 1
                assert len(comps) == 1 and len(comps[0]) == 10 * p
            else:
                zero_seen += 1
                assert len(comps) == p and all(len(c) == 10 for c in comps)
        assert nonzero_seen > 0


def test_lift_dichotomy_zero_total(cache):
    # hunt for an assignment from the true voltage sets with vanishing total
    for k in (61, 81, 121):
        q = cache.quotient(k, 0)
        p = q.p
        rng = random.Random(k + 1)
        cycle = tuple(range(10))
        edge_sets = [q.voltages[cycle[e]][cycle[(e + 1) % 10]] for e in range(10)]
        found = None
        for _ in range(5000):
            choices = [rng.choice(vs) for vs in edge_sets[:-1]]
            need = (-sum(choices)) % p
            if need in edge_sets[-1]:
                found = choices + [need]
                break
        assert found is not None, f"no zero-sum assignment found at k={k}"
        comps = unroll_lift(q, cycle, found)
        assert len(comps) == p
        assert all(len(c) == 10 for c in comps)
        cover = {v for c in comps for v in c}
        assert len(cover) == 10 * p


def test_lift_cycle_switches_away_from_zero_total(cache):
    # force the all-smallest selection to sum to zero by rotating the cycle
    # start; regardless of the outcome, the chosen voltages must be real and
    # the total nonzero
    q = cache.quotient(61, 3)
    for start in range(10):
        cycle = tuple((start + j) % 10 for j in range(10))
        cert = lift_cycle(q, cycle=cycle)
        assert cert.total_voltage % q.p != 0
        assert len(set(cert.vertices)) == 310


def test_verify_accepts_emitted(cache, field61):
    cert = lift_cycle(cache.quotient(61, 4))
    assert verify_certificate(field61, cert)


def test_lift_survives_k81_degeneracy(cache, field81):
    # at i=4 both family-crossing edges of the standard cycle carry a
    # single voltage, so the nonzero-total switch must use another edge
    for i in range(5):
        cert = lift_cycle(cache.quotient(81, i))
        assert cert.total_voltage % 41 != 0
        assert len(set(cert.vertices)) == 410
        assert verify_certificate(field81, cert)


def test_verify_rejects_swapped_vertices(cache, field61):
    cert = lift_cycle(cache.quotient(61, 0))
    vs = list(cert.vertices)
    vs[10], vs[200] = vs[200], vs[10]
    bad = replace(cert, vertices=tuple(vs))
    res = verify_certificate(field61, bad)
    assert not res
    assert "not adjacent" in res.failure


def test_verify_rejects_duplicate_vertex(cache, field61):
    cert = lift_cycle(cache.quotient(61, 0))
    vs = list(cert.vertices)
    vs[5] = vs[17]
    res = verify_certificate(field61, replace(cert, vertices=tuple(vs)))
    assert not res
    assert "duplicates" in res.failure


def test_verify_rejects_wrong_field(cache, field81):
    cert = lift_cycle(cache.quotient(61, 0))
    res = verify_certificate(field81, cert)
    assert not res


def test_verify_rejects_zero_total_voltage(cache, field61):
    cert = lift_cycle(cache.quotient(61, 0))
    res = verify_certificate(field61, replace(cert, total_voltage=0))
    assert not res and "total voltage" in res.failure


def test_verify_rejects_inconsistent_parameters(cache, field61):
    cert = lift_cycle(cache.quotient(61, 0))
    res = verify_certificate(field61, replace(cert, p=30))
    assert not res and "inconsistent" in res.failure


def test_verify_closing_edge(cache, field61):
    cert = lift_cycle(cache.quotient(61, 0))
    vs = list(cert.vertices)
    # rotating by one vertex keeps every adjacency, so stay valid
    rotated = replace(cert, vertices=tuple(vs[1:] + vs[:1]))
    assert verify_certificate(field61, rotated)


def test_certificate_text_round_trip(cache, field61):
    cert = lift_cycle(cache.quotient(61, 1))
    text = certificate_to_text(field61, cert)
    field2, cert2 = parse_certificate(text)
    assert cert2 == cert
    assert field2.order == 61
    assert certificate_to_text(field2, cert2) == text


def test_certificate_round_trip_extension_field(cache, field81):
    cert = lift_cycle(cache.quotient(81, 0))
    text = certificate_to_text(field81, cert)
    field2, cert2 = parse_certificate(text)
    assert cert2 == cert
    assert verify_certificate(field2, cert2)


def test_parse_rejects_malformed():
    with pytest.raises(ValueError):
        parse_certificate("")
    with pytest.raises(ValueError):
        parse_certificate("something-else 1\ns 61\n")


def test_corrupt_quotient_raises(cache):
    q = cache.quotient(61, 0)
    # single-voltage edges everywhere with zero sum cannot be fixed
    from dataclasses import replace as drep
    crippled = drep(
        q,
        voltages=tuple(tuple((0,) if a != b else () for b in range(10))
                       for a in range(10)),
        mult=tuple(tuple(1 if a != b else 0 for b in range(10))
                   for a in range(10)))
    with pytest.raises(InvariantViolation):
        lift_cycle(crippled)
