"""Smoke tests for the python bindings."""

import pytest

import skewbrace as sb


def test_catalog_and_group_basics():
    s3 = sb.catalog("s3")
    assert s3.order == 6
    assert not s3.is_abelian()
    assert s3.mul(1, 2) == 5
    assert sb.is_subgroup(s3, [0, 3])
    assert sb.is_normal(s3, [0, 4, 5])
    assert len(sb.automorphisms(s3)) == 6


def test_s3c6_brace_roundtrip():
    d = sb.s3c6_brace()
    assert sb.is_skew_brace(d)
    assert sb.is_skew_brace_via_lambda(d)
    assert sb.lambda_map(d, 1).images == [0, 2, 1, 3, 5, 4]

    decs = sb.idempotent_endomorphisms(d)
    nontrivial = [x for x in decs if 1 < len(x.subgroup) < d.order]
    assert len(nontrivial) == 1
    dec = nontrivial[0]
    assert dec.subgroup == [0, 3]
    assert dec.ideal.elements == [0, 4, 5]

    act = sb.extract_action(d, dec)
    assert act.phi_star[1].images == [0, 2, 1]
    assert act.phi_circ[1].images == [0, 1, 2]

    p = sb.outer_product(act)
    assert sb.is_skew_brace(p)
    alpha = sb.alpha_isomorphism(d, dec)
    assert sorted(alpha.images) == list(range(6))
    assert sb.brace_condition(act).holds
    assert sb.corollary_split(act) == (True, True)


def test_dgt_round_trip():
    d = sb.catalog_digroup("s3c6")
    text = sb.emit_dgt(d)
    back = sb.parse_dgt(text)
    assert sb.emit_dgt(back) == text
    with pytest.raises(ValueError):
        sb.parse_dgt("digroup 2\nstar\n1 0\n0 1\ncirc\n0 1\n1 0\n")


def test_ideal_algebra():
    d = sb.s3c6_brace()
    a3 = sb.as_ideal(d, [0, 4, 5])
    assert sb.ideal_generated_by(d, [4]).elements == [0, 4, 5]
    assert sb.commutator_ideal(d, a3, a3).elements == [0]
    assert sb.center(d).elements == sb.center_elementwise(d) == [0]
    join, meet = sb.lattice_ops(d, a3, a3)
    assert join.elements == [0, 4, 5]
    assert meet.elements == [0, 4, 5]


def test_ybe_solution():
    d = sb.s3c6_brace()
    r = sb.solution_from_brace(d)
    assert sb.braid_check(r)
    assert sb.nondegeneracy_check(r)
    assert not sb.nondegeneracy_check(sb.identity_solution(3))


def test_enumeration():
    star = sb.catalog("cyclic(3)")
    assert len(sb.enumerate_digroups(star, False)) == 1
    braces = sb.enumerate_digroups(sb.catalog("s3"), True)
    want = sb.s3c6_brace()
    assert any(d.circ.table == want.circ.table for d in braces)


def test_quotient_and_equivalences():
    d = sb.s3c6_brace()
    q = sb.quotient(d, sb.as_ideal(d, [0, 4, 5]))
    assert q.digroup.order == 2
    rep = sb.check_equivalences(d, [0, 3], [0, 4, 5])
    assert rep.all_equal() and rep.verdict()
