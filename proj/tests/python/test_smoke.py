"""Smoke tests for the python module built from the C++ core."""

import pytest

weyld = pytest.importorskip("weyld")


def test_longest_element_and_length():
    w0 = weyld.longest_element(5)
    assert w0.one_line() == "(-1,-2,-3,-4,5)"
    assert w0.length() == 20
    assert weyld.is_rational(w0)


def test_round_trip_and_group_ops():
    c1 = weyld.SignedPerm.from_one_line("(-5,-2,-3,-4,1)")
    assert c1.one_line() == "(-5,-2,-3,-4,1)"
    assert c1.inverse().one_line() == "(5,-2,-3,-4,-1)"
    assert c1.compose(c1.inverse()) == weyld.SignedPerm.identity(5)
    assert c1.length() == 13


def test_recognize():
    assert weyld.recognize("(-1,-3,-4,-5,2)") == {"kind": "c", "subset": [2, 3, 4]}
    assert weyld.recognize("(-1,-3,-4,5,-2)") == {"kind": "d", "subset": [2, 3, 4]}
    assert weyld.recognize("(-1,-2,-3,-4,5)") == {"kind": "w0"}
    assert weyld.recognize("(1,2,3,4,5)") == {"kind": "not_rational"}


def test_family_data():
    assert weyld.c_element(5, [2, 3, 4]).one_line() == "(-1,-3,-4,-5,2)"
    assert weyld.d_element(5, [2, 3, 4]).one_line() == "(-1,-3,-4,5,-2)"
    assert weyld.family_length(5, [1]) == 13
    assert weyld.family_defect(5, [1]) == 7
    assert weyld.arrow_count(5, [1]) == 9
    assert weyld.defect_polynomial(5) == [1, 2, 2, 4, 6, 8, 6, 2]
    assert weyld.rational_ascents(weyld.c_element(5, [1])) == [4]


def test_certificates():
    s1w0 = weyld.simple_reflection(1, 5).compose(weyld.longest_element(5))
    assert weyld.find_certificate(s1w0) == {"kind": "loop", "root": "e1-e2"}
    assert weyld.find_certificate("(-5,-2,-3,-4,1)") is None


def test_nu_levels():
    levels = weyld.nu_levels(weyld.SignedPerm.from_one_line("(-5,-2,-3,-4,1)"))
    assert levels[1] == ["e2-e5", "e3-e5", "e4-e5"]
    assert levels[2] == []


def test_gamma_counts():
    assert weyld.gamma_vertex_count(5) == 31
    assert weyld.gamma_edge_count(5) == 40
    assert weyld.gamma_edge_count(7) == 224
    assert "w0 -- c_4" in weyld.gamma_dot(5)


def test_brute_force_verify():
    report = weyld.brute_force_verify(5, 2)
    assert report["rational_count"] == 31
    assert report["group_order"] == 1920
    assert report["mismatches"] == []
    assert report["counts_match"]
    assert len(report["rationals"]) == 31


def test_deletion_word():
    assert weyld.deletion_word(5, [2]) == [4, 3, 2, 3, 4]
