import json
from math import gcd

import pytest

import rimtwist as rt
from rimtwist import GroupPresentation, SurgeryParams, congruent_pm1
from helpers import FIGURE_EIGHT, TREFOIL, TREFOIL_SUM


def test_params_validation():
    with pytest.raises(ValueError):
        SurgeryParams(d=0, m=1)
    with pytest.raises(ValueError, match="open cases"):
        SurgeryParams(d=2, m=3, cp2_degree=2)
    with pytest.raises(ValueError, match="equal d"):
        SurgeryParams(d=5, m=4, cp2_degree=3)
    p = SurgeryParams(d=5, m=4, cp2_degree=5)
    assert p.sw_nontrivial  # the degree-d curve hypothesis implies it
    assert SurgeryParams(d=3, m=0).m == 0


def test_congruence_semantics():
    assert congruent_pm1(5, 4) and congruent_pm1(3, 4) and congruent_pm1(7, 8)
    assert not congruent_pm1(5, 7) and not congruent_pm1(3, 7)
    assert congruent_pm1(17, 1) and congruent_pm1(4, 1)  # m = 1 always
    assert congruent_pm1(3, 2) and not congruent_pm1(4, 2)  # m = 2 means d odd
    assert congruent_pm1(5, -4) and not congruent_pm1(5, -7)  # |m| is used
    assert congruent_pm1(1, 0) and not congruent_pm1(2, 0)  # m = 0 edge case
    assert congruent_pm1(1, 5)  # d = 1 always passes for m >= 1


def test_twist_rim_presentation_unknot():
    unknot = rt.presentation_of_knot(rt.Unknot())
    for d, m in [(1, 0), (3, 2), (7, 5)]:
        p = rt.twist_rim_presentation(unknot, d, m)
        assert p.generator_count == 1
        assert rt.todd_coxeter(p).order == d


def test_twist_rim_presentation_shape():
    tre = rt.presentation_of_knot(TREFOIL)
    p = rt.twist_rim_presentation(tre, 5, 4)
    assert len(p.relators) == len(tre.relators) + tre.generator_count
    assert p.relators[len(tre.relators)] == (1, 1, 1, 1, 1)
    # conjugation relator: g_j^-1 mu^-m g_j mu^m
    assert p.relators[-1] == (-3, -1, -1, -1, -1, 3, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        rt.twist_rim_presentation(GroupPresentation((), (), 1), 2, 2)


def test_twist_rim_orders():
    tre = rt.presentation_of_knot(TREFOIL)
    assert rt.todd_coxeter(rt.twist_rim_presentation(tre, 2, 2)).order == 6
    assert rt.is_cyclic_of_order(rt.twist_rim_presentation(tre, 5, 4), 5) == "yes"
    fig8 = rt.presentation_of_knot(FIGURE_EIGHT)
    assert rt.is_cyclic_of_order(rt.twist_rim_presentation(fig8, 3, 2), 3) == "yes"


def test_classical_rim_surgery_m0():
    # m = 0 keeps only the meridian power: for d = 1 everything collapses
    tre = rt.presentation_of_knot(TREFOIL)
    assert rt.todd_coxeter(rt.twist_rim_presentation(tre, 1, 0)).order == 1
    # for d = 2 the quotient is the knot group modulo the squared meridian
    assert rt.todd_coxeter(rt.twist_rim_presentation(tre, 2, 0)).order == 6


def test_congruence_sweep_matches_enumeration():
    # wherever d = +/-1 mod m, the enumerated order equals d
    corpus = [TREFOIL, FIGURE_EIGHT, rt.parse_knot("T(2,5)")]
    for knot in corpus:
        pres = rt.presentation_of_knot(knot)
        for d in range(2, 8):
            for m in range(2, 9):
                if not congruent_pm1(d, m):
                    continue
                p = rt.twist_rim_presentation(pres, d, m)
                assert rt.is_cyclic_of_order(p, d) == "yes", (rt.render(knot), d, m)


def test_ribbon_certificate():
    assert rt.ribbon_certificate(TREFOIL_SUM) == "certified"
    assert rt.ribbon_certificate(TREFOIL) == "unknown"
    assert rt.ribbon_certificate(rt.Unknot()) == "certified"
    # reassociation and mirror pushdown
    nested = rt.parse_knot("T(2,3)#T(2,5)#mirror(T(2,5)#T(2,3))")
    assert rt.ribbon_certificate(nested) == "certified"
    assert rt.ribbon_certificate(rt.parse_knot("T(2,3)#T(2,3)")) == "unknown"
    assert rt.ribbon_certificate(rt.parse_knot("mirror(mirror(unknot))")) == "certified"
    double = rt.parse_knot("mirror(mirror(T(2,3)))#mirror(T(2,3))")
    assert rt.ribbon_certificate(double) == "certified"


def test_classify_flagship_example():
    report = rt.classify(TREFOIL_SUM, SurgeryParams(d=5, m=4, cp2_degree=5))
    assert rt.poly_text(report.alexander) == "t^4 - 2t^3 + 3t^2 - 2t + 1"
    assert report.pi1.kind == "cyclic" and report.pi1.order == 5
    assert report.smoothly_knotted == "yes"
    assert report.topologically_standard == "yes"
    assert report.cp2_genus == 6
    assert report.branched_order == 1
    assert report.pi1_obstruction is False


def test_classify_unknot():
    report = rt.classify(rt.Unknot(), SurgeryParams(d=3, m=2))
    assert report.alexander == rt.LaurentPoly.one()
    assert report.pi1.kind == "cyclic" and report.pi1.order == 3
    assert report.smoothly_knotted == "no-evidence"
    assert report.topologically_standard == "yes"


def test_classify_pi1_obstruction():
    report = rt.classify(TREFOIL, SurgeryParams(d=2, m=2))
    assert report.pi1.kind == "finite" and report.pi1.order == 6
    assert report.pi1_obstruction is True
    assert report.topologically_standard == "no"
    assert report.topologically_standard_failed == "pi1-obstruction"


def test_classify_smith_obstruction_without_enumeration():
    # d = 2, m even, nontrivial Alexander polynomial: obstructed even when
    # the coset budget is too small to finish
    report = rt.classify(TREFOIL, SurgeryParams(d=2, m=2), budget=3)
    assert report.pi1.kind == "undetermined"
    assert report.pi1_obstruction is True
    assert report.topologically_standard == "no"


def test_classify_budget_exhaustion_is_undetermined():
    # congruence fails and the budget is too small: no fabricated verdict
    report = rt.classify(FIGURE_EIGHT, SurgeryParams(d=3, m=3), budget=3)
    assert report.pi1.kind == "undetermined"
    assert report.topologically_standard in ("unknown", "no")


def test_classify_never_yes_with_obstruction():
    for knot in (TREFOIL, FIGURE_EIGHT, TREFOIL_SUM):
        for d in (2, 3, 5):
            for m in (0, 2, 3, 4):
                report = rt.classify(knot, SurgeryParams(d=d, m=m), budget=20000)
                if report.topologically_standard == "yes":
                    assert report.pi1_obstruction is False


def test_classify_deterministic():
    a = rt.classify(TREFOIL_SUM, SurgeryParams(d=5, m=4, cp2_degree=5))
    b = rt.classify(TREFOIL_SUM, SurgeryParams(d=5, m=4, cp2_degree=5))
    assert a == b
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)


def test_report_json_schema():
    report = rt.classify(TREFOIL_SUM, SurgeryParams(d=5, m=4, cp2_degree=5))
    obj = report.to_json()
    assert set(obj) == {
        "knot", "d", "m", "alexander", "pi1", "smoothly_knotted",
        "topologically_standard", "branched_cover", "cp2",
    }
    assert obj["pi1"] == {"kind": "cyclic", "order": 5, "certificate": "congruence"}
    assert obj["branched_cover"] == {"order": 1}
    assert obj["cp2"] == {"degree": 5, "genus": 6}
    assert obj["topologically_standard"] == {"verdict": "yes"}

    plain = rt.classify(TREFOIL, SurgeryParams(d=6, m=6), budget=2000).to_json()
    assert "cp2" not in plain
    assert plain["branched_cover"] == {"order": "infinite"}


def test_enumerate_examples_rows():
    reports = rt.enumerate_examples(3, 5, 7, 8)
    rows = {
        (r.knot.left.p, r.knot.left.q, r.params.d, r.params.m) for r in reports
    }
    assert (2, 3, 5, 4) in rows
    for r in reports:
        assert r.smoothly_knotted == "yes"
        assert r.topologically_standard == "yes"
        assert r.branched_order == 1
        assert congruent_pm1(r.params.d, r.params.m)
        assert r.alexander != rt.LaurentPoly.one()
        assert rt.ribbon_certificate(r.knot) == "certified"
        p, q, d = r.knot.left.p, r.knot.left.q, r.params.d
        assert gcd(p, q) == 1 and gcd(d, p) == 1 and gcd(d, q) == 1


def test_enumerate_examples_deterministic_order():
    a = rt.enumerate_examples(3, 5, 7, 8)
    b = rt.enumerate_examples(3, 5, 7, 8)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]
    keys = [(r.knot.left.p, r.knot.left.q, r.params.d, r.params.m) for r in a]
    assert keys == sorted(keys)


def test_enumerate_examples_small_bounds_empty():
    # with everything bounded by 3 no admissible d survives the coprimality
    # filter, so the row set is empty (and deterministically so)
    assert rt.enumerate_examples(3, 3, 3, 3) == []
    with pytest.raises(ValueError):
        rt.enumerate_examples(1, 3, 3, 3)
