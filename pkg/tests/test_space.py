import itertools

import pytest

from markedgroups.families import builtin_families
from markedgroups.oracles import UnknownVerdictError, build_oracle
from markedgroups.presentations import parse_presentation
from markedgroups.space import convergence_report, distance, rel_ball
from markedgroups.words import free_reduce, make_word


def fam(name):
    return next(f for f in builtin_families() if f.name == name)


# relation balls

def test_rel_ball_free_group_is_identity_only():
    p = parse_presentation("gens: x\nrels:")
    ball = rel_ball(p, build_oracle("free", p), 10)
    assert ball.members == frozenset({make_word(1, ())})


def test_rel_ball_z5():
    p = parse_presentation("gens: x\nrels: x^5")
    ball = rel_ball(p, build_oracle("abelian:5", p), 5)
    assert ball.members == frozenset(
        {make_word(1, ()), make_word(1, (1,) * 5), make_word(1, (-1,) * 5)}
    )


def test_rel_ball_z2_radius4_brute_force(z2):
    # independent enumeration: all raw 4-letter sequences, reduced, with
    # zero exponent sums, plus the identity
    expected = {()}
    for raw in itertools.product((1, -1, 2, -2), repeat=4):
        reduced = free_reduce(raw)
        if len(reduced) == 4:
            if sum(1 if x == 1 else -1 for x in reduced if abs(x) == 1) == 0 and \
               sum(1 if x == 2 else -1 for x in reduced if abs(x) == 2) == 0:
                expected.add(reduced)
    ball = rel_ball(z2, build_oracle("abelian:0,0", z2), 4)
    assert {w.letters for w in ball.members} == expected
    assert len(ball.members) == 9


def test_rel_ball_inversion_closed(z2, d3):
    for pres, spec in ((z2, "abelian:0,0"), (d3, "coset:100")):
        ball = rel_ball(pres, build_oracle(spec, pres), 5)
        for w in ball.members:
            assert w.inverse() in ball.members
            assert len(w) <= 5
        assert make_word(pres.ngens, ()) in ball.members


def test_rel_ball_unknown_verdict_rejected(a3):
    oracle = build_oracle("derivation:8,100", a3)
    with pytest.raises(UnknownVerdictError):
        rel_ball(a3, oracle, 4)


def test_rel_ball_nesting_and_quotient_direction():
    # quotients have more relations: Rel(member) contains Rel(limit)
    for name, radius in (("zxz", 4), ("dihedral", 5)):
        family = fam(name)
        limit_pres, limit_oracle = family.limit()
        member_pres, member_oracle = family.member(3)
        limit_ball = rel_ball(limit_pres, limit_oracle, radius)
        member_ball = rel_ball(member_pres, member_oracle, radius)
        assert limit_ball.members <= member_ball.members
        smaller = rel_ball(limit_pres, limit_oracle, radius - 1)
        assert smaller.members <= limit_ball.members


# distances

def test_distance_z5_vs_z():
    family = fam("cyclicZ")
    p5, o5 = family.member(5)
    pz, oz = family.limit()
    d = distance(p5, o5, pz, oz, 10)
    assert d.kind == "exact" and d.lam == 4
    assert abs(d.display - 0.0183156) < 1e-6


def test_distance_z5_vs_z7():
    family = fam("cyclicZ")
    p5, o5 = family.member(5)
    p7, o7 = family.member(7)
    d = distance(p5, o5, p7, o7, 10)
    assert d.kind == "exact" and d.lam == 4


def test_distance_identical_groups(z2):
    oracle = build_oracle("abelian:0,0", z2)
    d = distance(z2, oracle, z2, oracle, 6)
    assert d.kind == "at_most" and d.lam == 6


def test_distance_symmetry():
    family = fam("dihedral")
    p4, o4 = family.member(4)
    pl, ol = family.limit()
    d1 = distance(p4, o4, pl, ol, 12)
    d2 = distance(pl, ol, p4, o4, 12)
    assert d1 == d2


def test_distance_requires_same_marking(a3, z2):
    with pytest.raises(ValueError):
        distance(a3, build_oracle("abelian:3", a3), z2, build_oracle("abelian:0,0", z2), 4)


def test_exact_self_consistency():
    family = fam("cyclicZ")
    p5, o5 = family.member(5)
    pz, oz = family.limit()
    d = distance(p5, o5, pz, oz, 10)
    again = distance(p5, o5, pz, oz, d.lam)
    assert again.kind == "at_most" and again.lam == d.lam


def test_ultrametric_on_cyclic_triples():
    family = fam("cyclicZ")
    groups = {i: family.member(i) for i in (3, 4, 5, 6, 7)}
    groups["limit"] = family.limit()
    lam = {}
    for a, b in itertools.combinations(sorted(groups, key=str), 2):
        pa, oa = groups[a]
        pb, ob = groups[b]
        d = distance(pa, oa, pb, ob, 12)
        assert d.kind == "exact"
        lam[(a, b)] = lam[(b, a)] = d.lam
    for a, b, c in itertools.permutations(sorted(groups, key=str), 3):
        assert lam[(a, c)] >= min(lam[(a, b)], lam[(b, c)])


# convergence reports

def test_convergence_cyclic():
    report = convergence_report(fam("cyclicZ"), range(3, 8), 10)
    assert [(i, d.kind, d.lam) for i, d in report.rows] == [
        (i, "exact", i - 1) for i in range(3, 8)
    ]
    assert report.lambda_non_decreasing


def test_convergence_dihedral():
    report = convergence_report(fam("dihedral"), (3, 4, 5), 12)
    assert [(i, d.lam) for i, d in report.rows] == [(3, 5), (4, 7), (5, 9)]
    assert report.lambda_non_decreasing


def test_convergence_zxz():
    report = convergence_report(fam("zxz"), (3, 4, 5), 8)
    assert [(i, d.lam) for i, d in report.rows] == [(3, 2), (4, 3), (5, 4)]


def test_rel_ball_serialization(z2):
    ball = rel_ball(z2, build_oracle("abelian:0,0", z2), 4)
    data = ball.to_json(z2)
    assert data["lambda"] == 4 and data["count"] == 9
    assert data["members"][0] == "1"
    assert data["members"] == sorted(data["members"], key=lambda s: data["members"].index(s))
    d = distance(z2, build_oracle("abelian:0,0", z2), z2, build_oracle("abelian:0,0", z2), 3)
    assert d.to_json() == {"kind": "at_most", "lambda": 3, "display": d.display}
