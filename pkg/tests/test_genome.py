import random

import pytest

from invdel import (DihedralElement, Genome, GenomeParseError,
                    InvalidArgumentError, RegionAlphabet, ReferenceFrame,
                    canonicalize, dihedral_apply, genomes_from_token_lists,
                    parse_genomes, region_set_ops)

ALPHA = RegionAlphabet.from_tokens("abcdefghij")


def frame(tokens):
    return ReferenceFrame.from_tokens(ALPHA, tokens)


def test_rotation_matches_figure():
    g = DihedralElement(8, 2)
    assert dihedral_apply(frame("abcdefgh"), g).tokens == tuple("cdefghab")


def test_reflection_matches_figure():
    g = DihedralElement.reflection(8)
    assert dihedral_apply(frame("abcdefgh"), g).tokens == tuple("hgfedcba")


def test_identity_apply():
    f = frame("abcde")
    assert dihedral_apply(f, DihedralElement.identity(5)) == f


def test_apply_then_inverse_is_identity():
    rng = random.Random(21)
    for _ in range(100):
        n = rng.randint(1, 8)
        toks = rng.sample("abcdefghij", n)
        f = frame(toks)
        g = DihedralElement(n, rng.randrange(n), rng.random() < 0.5)
        assert dihedral_apply(dihedral_apply(f, g), g.inverse()) == f


def test_modulus_mismatch():
    with pytest.raises(InvalidArgumentError):
        dihedral_apply(frame("abc"), DihedralElement(4, 1))


def test_group_orders():
    assert len(DihedralElement.all_elements(1)) == 1
    assert len(DihedralElement.all_elements(2)) == 2
    for n in range(3, 8):
        assert len(set(DihedralElement.all_elements(n))) == 2 * n


def test_composition_law():
    rng = random.Random(22)
    for n in (1, 2, 3, 5, 8):
        f = frame(sorted(rng.sample("abcdefghij", n)))
        for g1 in DihedralElement.all_elements(n):
            for g2 in DihedralElement.all_elements(n):
                lhs = dihedral_apply(f, g1 * g2)
                rhs = dihedral_apply(dihedral_apply(f, g2), g1)
                assert lhs == rhs


def test_canonicalize_examples():
    assert canonicalize(frame("cdab")).canonical.tokens == tuple("abcd")
    assert canonicalize(frame("hgfedcba")).canonical.tokens == tuple("abcdefgh")
    assert canonicalize(frame("a")).canonical.tokens == ("a",)


def test_canonicalize_idempotent_and_orbit_invariant():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(1, 8)
        toks = rng.sample("abcdefghij", n)
        f = frame(toks)
        g = canonicalize(f)
        assert canonicalize(g.canonical) == g
        sym = DihedralElement(n, rng.randrange(n), rng.random() < 0.5)
        assert canonicalize(dihedral_apply(f, sym)) == g


def test_frames_counts_and_membership():
    g3 = canonicalize(frame("abc"))
    assert {f.tokens for f in g3.frames()} == {
        tuple("abc"), tuple("bca"), tuple("cab"),
        tuple("cba"), tuple("bac"), tuple("acb"),
    }
    g2 = canonicalize(frame("ab"))
    assert {f.tokens for f in g2.frames()} == {("a", "b"), ("b", "a")}
    g8 = canonicalize(frame("abcdefgh"))
    frames8 = {f.tokens for f in g8.frames()}
    assert len(frames8) == 16
    assert tuple("cdefghab") in frames8 and tuple("hgfedcba") in frames8
    g1 = canonicalize(frame("a"))
    assert len(g1.frames()) == 1


def test_frames_contains_original():
    rng = random.Random(24)
    for _ in range(50):
        toks = rng.sample("abcdefghij", rng.randint(1, 8))
        f = frame(toks)
        assert f in canonicalize(f).frames()


def test_genome_equality_is_dihedral():
    a, b, c = genomes_from_token_lists("abc", "bca", "acb")
    assert a == b == c
    assert len({a, b, c}) == 1
    d = genomes_from_token_lists("abcd", "abdc")
    assert d[0] != d[1]


def test_region_set_ops_figure():
    g1, g2 = genomes_from_token_lists("abcdefgh", "eibach")
    inter, sym, union = region_set_ops(g1, g2)
    assert inter == frozenset("abceh")
    assert sym == frozenset("dfgi")
    assert union == frozenset("abcdefghi")


def test_region_set_ops_trivial():
    g1, g2 = genomes_from_token_lists("abc", "abc")
    assert region_set_ops(g1, g2)[1] == frozenset()
    g3, g4 = genomes_from_token_lists("abc", "xyz")
    inter, sym, _ = region_set_ops(g3, g4)
    assert inter == frozenset() and len(sym) == 6


def test_symmetric_difference_identity():
    rng = random.Random(25)
    pool = list("abcdefghij")
    for _ in range(50):
        rng.shuffle(pool)
        t1 = pool[: rng.randint(1, 8)]
        rng.shuffle(pool)
        t2 = pool[: rng.randint(1, 8)]
        g1, g2 = genomes_from_token_lists(t1, t2)
        inter, sym, _ = region_set_ops(g1, g2)
        assert len(sym) == len(t1) + len(t2) - 2 * len(inter)


def test_alphabet_mismatch_rejected():
    g1 = Genome.from_tokens(RegionAlphabet.from_tokens("abc"), "abc")
    g2 = Genome.from_tokens(RegionAlphabet.from_tokens("abd"), "abd")
    with pytest.raises(InvalidArgumentError):
        region_set_ops(g1, g2)


def test_frame_validation():
    with pytest.raises(InvalidArgumentError):
        ReferenceFrame.from_tokens(ALPHA, "aba")
    with pytest.raises(InvalidArgumentError):
        ReferenceFrame.from_tokens(ALPHA, "")
    with pytest.raises(InvalidArgumentError):
        ReferenceFrame.from_tokens(ALPHA, ["a", "z"])


# -- genome file parsing ------------------------------------------------------

GOOD = """\
# two small genomes
G1: a b c d
G2: a c b e

empty_ok_comment: x y
"""


def test_parse_genomes():
    named = parse_genomes(GOOD)
    assert [name for name, _ in named] == ["G1", "G2", "empty_ok_comment"]
    byname = dict(named)
    assert byname["G1"].regions == frozenset("abcd")
    # all genomes share one alphabet covering the whole file
    assert byname["G1"].alphabet == byname["G2"].alphabet
    assert "x" in byname["G1"].alphabet


@pytest.mark.parametrize("text,lineno", [
    ("G1 a b c", 1),
    ("G1:", 1),
    (": a b", 1),
    ("G1: a b\nG2: a a", 2),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(GenomeParseError) as exc:
        parse_genomes(text)
    assert exc.value.line == lineno


def test_parse_duplicate_names():
    with pytest.raises(GenomeParseError):
        parse_genomes("G: a b\nG: b a")
