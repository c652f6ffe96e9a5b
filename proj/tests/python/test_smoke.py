import json

import pytest

monoidlab = pytest.importorskip("monoidlab")


def test_rational_helpers():
    assert monoidlab.make_rational(34, 144) == "17/72"
    assert monoidlab.padic_valuation("1/2", 2) == -1
    assert monoidlab.padic_valuation("18", 3) == 2
    assert monoidlab.in_localization("17/72", [2, 3])
    assert not monoidlab.in_localization("1/5", [2, 3])


def test_ratfunc():
    assert monoidlab.ratfunc_eq("s*(1/s)", "1")
    assert not monoidlab.ratfunc_eq("s + t", "s*t")
    assert monoidlab.ratfunc_eq("(s/t) + (t/s)", "(s^2 + t^2)/(s*t)")


def test_finite_field():
    assert monoidlab.multiplicative_order(2, 5) == 4
    assert monoidlab.primitive_roots(5) == [2, 3]
    assert monoidlab.binomial_irreducible(4, 2, 5)
    assert not monoidlab.binomial_irreducible(2, 1, 5)
    assert monoidlab.trinomial_parameter(7) == 2
    assert monoidlab.is_irreducible("x^6+x^3+1", 2)
    unit, factors = monoidlab.factorize("x^2+x", 2)
    assert unit == 1
    assert factors == [("x", 1), ("x + 1", 1)]
    assert monoidlab.frobenius_power_check("x^2+x+1", 2, 2)


def test_puiseux_monoid():
    assert monoidlab.ell_sequence(2, 3, 2) == 5
    assert monoidlab.generators(2, 3, 1) == ("17/72", "19/72")
    cert = monoidlab.membership("1/2", q=2, r=3, depth=1)
    assert cert == {"a1": 1, "b1": 1}
    assert monoidlab.membership("1/36", q=2, r=3, depth=6) is None
    assert monoidlab.divides("19/72", "17/72", q=2, r=3, depth=6) is None
    is_atom, refutation = monoidlab.is_atom("a1", q=2, r=3, depth=6)
    assert is_atom and refutation is None
    facts = monoidlab.factorizations("1/2", q=2, r=3, depth=2)
    assert {"a1": 1, "b1": 1} in facts


def test_semidomain():
    assert monoidlab.substitute_power("x^2+x+1", 2, "3") == "x^6 + x^3 + 1"
    sub = monoidlab.substitute_power("x^2+x+1", 2, "1/2")
    assert sub == "x + x^(1/2) + 1"
    standard, den = monoidlab.clear_denominators("x + x^(1/2) + 1", 2)
    assert standard == "x^2 + x + 1"
    assert den == "2"
    status, witness = monoidlab.atom_test("x^2+x+1", 2, q=2, r=3, depth=6)
    assert status == "reducible"
    assert witness == ("x + x^(1/2) + 1", "x + x^(1/2) + 1")
    certified, entries = monoidlab.support_in_monoid("x^(1/2) + 1", 2, q=2, r=3, depth=1)
    assert certified
    unit, atoms = monoidlab.ascent_factorization_fp("x^6+x^3+1", 2)
    assert unit == 1 and atoms == ["x^6 + x^3 + 1"]
    const, z_atoms = monoidlab.ascent_factorization_z("2*x^2 + 2*x")
    assert const == "2"
    assert z_atoms == ["x", "x + 1"]


def test_subring():
    assert monoidlab.subring_atomic("x", "ZQ")
    assert not monoidlab.subring_atomic("(1/2)*x^2", "ZQ")
    assert monoidlab.subring_member("s*x^2", "ZKst")
    assert not monoidlab.subring_member("(1/2)*x", "ZQ")
    assert monoidlab.almost_atomic_witness("(1/2)*x^2 + x^3", "ZQ") == "2"
    assert monoidlab.quasi_atomic_witness("s*x^2", "ZKst") == "(1/s)*x^2"
    assert monoidlab.claim2_polynomials(1, [0, 0]) == ["-1*x", "x^2"]
    status, reason = monoidlab.refute_candidate("1", ["x", "x", "s*y + t"])
    assert status == "invalid"


def test_papercheck_suite():
    raw = monoidlab.papercheck("trinomials")
    report = json.loads(raw)
    assert report["failed"] == 0
    assert report["total"] >= 1
