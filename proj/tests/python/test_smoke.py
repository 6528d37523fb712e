from fractions import Fraction

import pytest

import azposet


def test_generate_boolean():
    b = azposet.generate("boolean:4")
    assert b.whitney == [1, 4, 6, 4, 1]
    assert len(b) == 16
    assert b.is_u_poset


def test_identity_sum_on_regular_poset():
    b = azposet.generate("boolean:3")
    r = azposet.az_identity_sum(b, ["{1}", "{2,3}"])
    assert r["total"] == Fraction(1)
    assert r["regular"]


def test_irregular_figure_deviates():
    p = azposet.generate("fig1a")
    assert azposet.az_identity_sum(p, ["a", "c"])["total"] == Fraction(5, 4)
    cert = azposet.check_regular(p)
    assert not cert["holds"]
    assert cert["violation"]["rank"] == 2


def test_normality_modes_agree():
    for spec in ["subspace:3,2", "fig1b", "star:2,3"]:
        p = azposet.generate(spec)
        assert azposet.check_normal(p, "flow")["holds"] == azposet.check_normal(p, "enumerate")["holds"]


def test_beta_and_second_identity():
    b = azposet.generate("boolean:4")
    assert azposet.beta(b, 1, 2) == Fraction(1, 3)
    b3 = azposet.generate("boolean:3")
    r = azposet.second_az_identity(b3, [(1, 3), (4, 6)])
    assert r["total"] == Fraction(1)


def test_strict_sperner():
    cert = azposet.check_strict_k_sperner(azposet.generate("boolean:3"), 2)
    assert cert["holds"]
    assert cert["maximum_size"] == 6


def test_two_part_maximum():
    b = azposet.generate("boolean:2")
    size, families = azposet.max_two_part_sperner(b, b, all=True)
    assert size == 6
    assert len(families) == 2
    assert azposet.well_paired_size(b, b) == 6
    assert azposet.verify_strict_two_part(b, b)["holds"]


def test_errors_carry_codes():
    with pytest.raises(azposet.AzposetError) as info:
        azposet.az_identity_sum(azposet.generate("star:2,2"), [0])
    assert info.value.code == "NotUPoset"
    with pytest.raises(azposet.AzposetError):
        azposet.generate("nosuch:1")


def test_acceptance_subset():
    results = azposet.run_acceptance([2, 9])
    assert [r["id"] for r in results] == [2, 9]
    assert all(r["pass"] for r in results)
