import itertools

import pytest

from oracles import clebsch_gordan
from subreg.automaton import enumerate_box
from subreg.coxeter import INF
from subreg.errors import IndexOutOfRange, InvalidLetter, InvalidN, NotInBox
from subreg.fusion import (
    FreeFusionElement,
    FusionSet,
    L,
    VerlindeElement,
    amalg_to_j,
    decode_amalg,
    decode_unitary,
    encode_amalg,
    encode_unitary,
    ffr_anti_involution,
    ffr_mul,
    fusion_set_O,
    fusion_set_S,
    fusion_set_U,
    fusion_set_Z,
    fusion_word,
    orthogonal_to_j,
    path_mult_check,
    unitary_to_j,
    verlinde_mul,
    verlinde_to_j,
)
from subreg.jring import JElement, mul
from subreg.systems import dihedral, thmD_triangle, thmE


# -- Verlinde ----------------------------------------------------------------

@pytest.mark.parametrize("M", [3, 4, 5, 6, 7, 8])
def test_verlinde_rule(M):
    for k in range(1, M):
        for l in range(1, M):
            assert dict(verlinde_mul(k, l, M).items()) == clebsch_gordan(k, l, M)


def test_small_verlinde_squares():
    assert verlinde_mul(3, 3, 4) == L(1, 4)
    assert verlinde_mul(3, 3, 5) == L(1, 5) + L(3, 5)
    assert verlinde_mul(3, 3, 6) == L(1, 6) + L(3, 6) + L(5, 6)


@pytest.mark.xfail(strict=True, reason=(
    "the truncated rule and the Hecke oracle both give L_1 + L_3 for M = 5; "
    "L_3 L_3 = L_1 holds for M = 4"))
def test_documented_square_for_m5():
    assert verlinde_mul(3, 3, 5) == L(1, 5)


def test_verlinde_odd_part_closed():
    for k, l in itertools.product((1, 3, 5), repeat=2):
        assert verlinde_mul(k, l, 7).is_odd()


def test_verlinde_index_checks():
    with pytest.raises(IndexOutOfRange):
        verlinde_mul(0, 1, 5)
    with pytest.raises(IndexOutOfRange):
        L(5, 5)
    assert verlinde_mul(40, 2, INF) == VerlindeElement({39: 1, 41: 1}, INF)


@pytest.mark.parametrize("M", [4, 7])
def test_verlinde_to_dihedral(M):
    d = dihedral(M)
    for k in range(1, M):
        for l in range(1, M):
            if k % 2 and l % 2:
                assert verlinde_to_j(L(k, M) * L(l, M), d) == \
                    mul(verlinde_to_j(L(k, M), d), verlinde_to_j(L(l, M), d))


# -- free fusion rings -------------------------------------------------------

def test_ffr_orthogonal():
    O = fusion_set_O()
    assert ffr_mul("a", "a", O) == FreeFusionElement({(): 1, ("a", "a"): 1}, O)
    assert ffr_mul("aa", "a", O) == FreeFusionElement({("a",): 1, ("a", "a", "a"): 1}, O)


def _orthogonal_check(fs, top):
    d = dihedral(INF)
    for i in range(top + 1):
        for j in range(top + 1):
            v, w = ("a",) * i, ("a",) * j
            prod = fusion_word(v, fs) * fusion_word(w, fs)
            assert orthogonal_to_j(prod, d) == mul(orthogonal_to_j(fusion_word(v, fs), d),
                                                   orthogonal_to_j(fusion_word(w, fs), d))


@pytest.mark.xfail(strict=True, reason=(
    "with a o a empty, a.a = 1 + aa has two terms while t_121 t_121 = t_1 + t_121 + t_12121 "
    "has three, so a^k -> t_(1_(2k+1)) cannot be multiplicative"))
def test_singleton_without_fusion_matches_j1():
    _orthogonal_check(fusion_set_O(), 6)


def test_singleton_with_self_fusion_matches_j1():
    # a o a = a gives the SO(3)-type rule, which is the odd part of Ver_inf
    _orthogonal_check(fusion_set_S(), 6)


def test_ffr_unitary():
    U = fusion_set_U()
    assert ffr_mul("a", "b", U).render() == "1*1 + 1*ab"
    assert ffr_mul("a", "a", U).render() == "1*aa"


def test_ffr_letter_against_alternating_word():
    assert ffr_mul("a", "bab", fusion_set_U()).render() == "1*ab + 1*abab"


@pytest.mark.parametrize("i, j, k", [(1, 2, 1), (1, 2, 3), (2, 2, 2)])
def test_ffr_fusion_and_cancellation(i, j, k):
    Z = fusion_set_Z(3)
    tail = ("e31",)
    v = (f"e{i}{j}",)
    w = (f"e{j}{k}",) + tail
    expected = {v + w: 1, (f"e{i}{k}",) + tail: 1}
    if i == k:
        expected[tail] = expected.get(tail, 0) + 1
    assert ffr_mul(v, w, Z) == FreeFusionElement(expected, Z)


def test_ffr_matrix_units():
    Z = fusion_set_Z(2)
    assert ffr_mul("e12", "e21", Z).render() == "1*1 + 1*e11 + 1*e12.e21"
    assert ffr_mul("e12", "e12", Z).render() == "1*e12.e12"


def test_ffr_associative_and_unital():
    Z = fusion_set_Z(2)
    words = [w for k in range(3) for w in itertools.product(Z.letters, repeat=k)]
    unit = FreeFusionElement({(): 1}, Z)
    for u in words[:12]:
        for v in words[:12]:
            for w in words[:12]:
                a, b, c = (FreeFusionElement({x: 1}, Z) for x in (u, v, w))
                assert (a * b) * c == a * (b * c)
        a = FreeFusionElement({u: 1}, Z)
        assert unit * a == a == a * unit


def test_ffr_anti_involution():
    Z = fusion_set_Z(3)
    a = fusion_word("e12.e23", Z)
    assert ffr_anti_involution(a) == fusion_word("e32.e21", Z)


def test_fusion_set_checks():
    with pytest.raises(InvalidLetter):
        FusionSet(("a", "b"), (("a", "b"), ("b", "b")))
    with pytest.raises(InvalidN):
        fusion_set_Z(1)
    with pytest.raises(InvalidLetter):
        fusion_set_U().parse("abc")


# -- the unitary word model --------------------------------------------------

def test_unitary_worked():
    d = thmD_triangle()
    assert d.format_word(decode_unitary("abaa", d)) == "012120120"
    assert encode_unitary("012120120", d) == ("a", "b", "a", "a")
    assert d.format_word(decode_unitary("a", d)) == "0120"
    assert d.format_word(decode_unitary("", d)) == "0"


def test_unitary_bijection_on_box():
    d = thmD_triangle()
    box = enumerate_box(d, 0, 0, 12)
    codes = [encode_unitary(x, d) for x in box]
    assert len(set(codes)) == len(box)
    assert all(decode_unitary(c, d) == x for c, x in zip(codes, box))


def test_unitary_errors():
    d = thmD_triangle()
    with pytest.raises(NotInBox):
        encode_unitary("012", d)
    with pytest.raises(NotInBox):
        encode_unitary("0101", d)
    assert encode_unitary("0210", d) == ("b",)


def test_unitary_homomorphism_small():
    d = thmD_triangle()
    U = fusion_set_U()
    words = [w for k in range(4) for w in itertools.product("ab", repeat=k)]
    for v in words:
        for w in words:
            prod = fusion_word(v, U) * fusion_word(w, U)
            assert unitary_to_j(prod, d) == mul(JElement({decode_unitary(v, d): 1}, d),
                                                JElement({decode_unitary(w, d): 1}, d))


# -- the amalgamated word model ----------------------------------------------

@pytest.mark.parametrize("word, image", [
    ("e24", "02340"),
    ("e43", "0430"),
    ("e44", "040"),
    ("e24.e43.e44.e44", "023404304040"),
])
def test_amalg_worked(word, image):
    d = thmE(4)
    assert d.format_word(decode_amalg(4, word, d)) == image
    assert encode_amalg(4, image, d) == tuple(word.split("."))


def test_three_letter_factorisation():
    # 0230 * 040 * 040 glues to 02304040 (eight letters)
    d = thmE(4)
    assert d.format_word(decode_amalg(4, "e23.e44.e44", d)) == "02304040"


def test_amalg_errors():
    d = thmE(3)
    with pytest.raises(NotInBox):
        encode_amalg(3, "01210", d)
    with pytest.raises(NotInBox):
        encode_amalg(3, "012", d)
    with pytest.raises(InvalidLetter):
        decode_amalg(3, "e14", d)


def test_amalg_homomorphism_small():
    n = 3
    d = thmE(n)
    Z = fusion_set_Z(n)
    words = [w for k in range(3) for w in itertools.product(Z.letters, repeat=k)][:40]
    for v in words:
        for w in words:
            prod = fusion_word(v, Z) * fusion_word(w, Z)
            assert amalg_to_j(n, prod, d) == mul(JElement({decode_amalg(n, v, d): 1}, d),
                                                 JElement({decode_amalg(n, w, d): 1}, d))


def test_path_multiplication():
    for n in range(2, 5):
        for i, j, k in itertools.product(range(1, n + 1), repeat=3):
            assert path_mult_check(n, i, j, k)
    with pytest.raises(IndexOutOfRange):
        path_mult_check(3, 1, 4, 1)
