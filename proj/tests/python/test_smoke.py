from fractions import Fraction

import dcalg


def test_partition_ops():
    assert dcalg.z("3,2,2") == 24
    assert dcalg.partition_union("3,2", "2") == "3,2,2"
    assert dcalg.strip_ones("2,1,1") == "2"
    assert dcalg.pad_to("2", 4) == "2,1,1"


def test_cycle_structure():
    assert dcalg.cycle_type("(1 2)(3 4)", 5) == "2,2,1"
    assert dcalg.coset_type("(2 3)", 4) == "2"
    assert dcalg.bn_type("(1 2)(3 4)(5 6)", 6) == "∅|1,1,1"


def test_group_and_class_sizes():
    assert dcalg.group_order("hecke", 2) == 24
    assert dcalg.class_size("hecke", 2, "coset:2") == 16
    assert dcalg.class_size("center-sym", 4, "ct:2,1,1") == 6
    assert dcalg.class_size("gl", 2, "glrep:2001", q=3) == 12


def test_center_product():
    dec = dcalg.decompose_product("center-sym", 4, "ct:2,1,1", "ct:2,1,1")
    assert dec == {
        "ct:1,1,1,1": Fraction(6),
        "ct:3,1": Fraction(3),
        "ct:2,2": Fraction(2),
    }


def test_theorem_matches_bruteforce():
    bd = dcalg.theorem_coefficient("hecke", 4, "coset:2", "coset:2", "coset:3")
    brute = dcalg.coefficient("hecke", 4, "coset:2", "coset:2", "coset:3")
    assert bd["total"] == brute == Fraction(3 * 2**4 * 24)


def test_hypotheses_pass():
    reports = dcalg.verify_hypotheses("center-sym", n_max=3, k_max=2)
    assert all(r["pass"] for r in reports)


def test_polyfit():
    cert = dcalg.polyfit("center-sym", "ct:2", "ct:2", "ct:∅")
    assert cert["pass"]
    assert cert["coefficients"] == [Fraction(0), Fraction(-1, 2), Fraction(1, 2)]


def test_gl_identity_coefficient():
    # inverse-paired classes concentrate the class size on the identity
    v = dcalg.coefficient("gl", 2, "glrep:2001", "glrep:2001", "glrep:1001", q=3)
    assert v == Fraction(12)
