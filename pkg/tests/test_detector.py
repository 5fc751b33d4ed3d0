import random

import pytest
from hypothesis import given, settings, strategies as st

from invavoid.detector import (avoids, expand, find_instance, find_overlap,
                               find_suffix_instance)
from invavoid.involutions import Involution, Kind, enumerate_involutions
from invavoid.patterns import all_patterns, parse_pattern
from invavoid.words import from_text, prefix, to_text

from oracles import naive_find, naive_overlap, naive_suffix_instance

SWAP_M = Involution((1, 0), Kind.MORPHIC)
ID_A = Involution((0, 1), Kind.ANTIMORPHIC)
PATTERNS_UP_TO_4 = [p.compact() for n in range(1, 5) for p in all_patterns(n)]


def test_expand_examples():
    assert to_text(expand("xg(x)x", from_text("0"), SWAP_M)) == "010"
    assert to_text(expand("xxg(x)x", from_text("01"), SWAP_M)) == "01011001"
    assert to_text(expand("xg(x)", from_text("011"), ID_A)) == "011110"
    with pytest.raises(ValueError):
        expand("xG", b"", SWAP_M)


def test_find_instance_examples():
    occ = find_instance(from_text("0110"), "xg(x)", "m", k=2)
    assert (occ.start, occ.m, occ.involution) == (0, 1, SWAP_M)
    occ = find_instance(from_text("0011"), "xxg(x)g(x)", "m", k=2)
    assert (occ.start, occ.m, occ.involution) == (0, 1, SWAP_M)
    assert not avoids(from_text("0000"), "xxx", "m")


def test_planted_lemma1_counterexample():
    word = from_text("0100" + "11110011" + "0")
    occ = find_instance(word, "xxGx", "m", k=2)
    assert occ is not None
    # least in (start, m, involution) order: 1111 is x x g(x) x with g = id
    assert (occ.start, occ.m, occ.involution.is_identity()) == (4, 1, True)
    # the m=2 complement witness from the lemma's proof is also an instance
    assert expand("xxGx", from_text("11"), SWAP_M) == word[4:12]
    assert naive_find(word[4:12], "xxGx", False, 2)[:2] == (0, 1)


@pytest.mark.parametrize("name, pattern, kind", [
    ("w", "xxGx", "m"), ("v", "GxxG", "m"), ("u", "xGxG", "m"), ("u", "xxGG", "m"),
    ("periodic:0001", "GxxG", "a"),
])
def test_lemma_words_avoid_at_2000(name, pattern, kind):
    assert avoids(prefix(name, 2000), pattern, kind)


def test_lemma4_counterexample_in_w():
    word = prefix("w", 60)
    occ = find_instance(word, "xxGx", "a")
    assert (occ.start, occ.m, str(occ.involution)) == (10, 9, "id/a")
    x = to_text(occ.witness(word))
    assert x == "011100110"
    assert to_text(occ.factor(word)) == x + x + x[::-1] + x
    assert naive_find(word, "xxGx", True, 2) == (10, 9, (0, 1))


def test_overlap_examples():
    o = find_overlap(from_text("000"))
    assert (o.start, o.q) == (0, 1)
    o = find_overlap(from_text("01010"))
    assert (o.start, o.q) == (0, 2)
    assert find_overlap(prefix("tm", 4096)) is None
    assert find_overlap(b"") is None


@given(st.lists(st.integers(0, 2), max_size=40))
def test_overlap_matches_naive(letters):
    o = find_overlap(bytes(letters))
    expected = naive_overlap(letters)
    assert (None if o is None else (o.start, o.q)) == expected


def test_alphabet_checks():
    with pytest.raises(ValueError):
        find_instance(bytes([0, 3]), "xx", "m", k=2)
    # declared alphabet matters: over three letters 0 -> 2 is available
    assert find_instance(bytes([0, 2]), "xG", "m", k=3).involution.mapping == (2, 1, 0)


@st.composite
def word_case(draw, max_len=40):
    k = draw(st.integers(1, 3))
    word = bytes(draw(st.lists(st.integers(0, k - 1), max_size=max_len)))
    pattern = draw(st.sampled_from(PATTERNS_UP_TO_4))
    kind = draw(st.sampled_from("ma"))
    return word, pattern, kind, k


@settings(max_examples=400, deadline=None)
@given(word_case())
def test_agrees_with_naive_and_is_sound(case):
    word, pattern, kind, k = case
    occ = find_instance(word, pattern, kind, k)
    expected = naive_find(word, pattern, kind == "a", k)
    got = None if occ is None else (occ.start, occ.m, occ.involution.mapping)
    assert got == expected
    if occ is not None:
        assert expand(pattern, occ.witness(word), occ.involution) == occ.factor(word)


@settings(max_examples=200, deadline=None)
@given(word_case(max_len=25), st.data())
def test_monotone_under_factors(case, data):
    word, pattern, kind, k = case
    if not avoids(word, pattern, kind, k):
        return
    i = data.draw(st.integers(0, len(word)))
    j = data.draw(st.integers(i, len(word)))
    assert avoids(word[i:j], pattern, kind, k)


@settings(max_examples=200, deadline=None)
@given(word_case(max_len=30), st.permutations(range(3)))
def test_relabeling_invariance(case, sigma):
    word, pattern, kind, _ = case
    relabeled = bytes(sigma[a] for a in word)
    assert avoids(word, pattern, kind, 3) == avoids(relabeled, pattern, kind, 3)


def test_planted_instances_small():
    rng = random.Random(7)
    for _ in range(200):
        k = rng.randint(1, 3)
        inv = rng.choice(enumerate_involutions(k, rng.choice("ma")))
        p = parse_pattern("".join(rng.choice("xG") for _ in range(rng.randint(1, 4))))
        y = bytes(rng.randrange(k) for _ in range(rng.randint(1, 6)))
        left = bytes(rng.randrange(k) for _ in range(rng.randint(0, 20)))
        right = bytes(rng.randrange(k) for _ in range(rng.randint(0, 20)))
        assert find_instance(left + expand(p, y, inv) + right, p, inv.kind, k) is not None


@settings(max_examples=300, deadline=None)
@given(word_case(max_len=30))
def test_suffix_check_matches_full_scan(case):
    # only suffix instances are reported, and any instance ending last is found
    word, pattern, kind, k = case
    p = parse_pattern(pattern)
    occ = find_suffix_instance(word, p, enumerate_involutions(k, kind))
    assert (occ is not None) == naive_suffix_instance(word, pattern, kind == "a", k)
    if occ is not None:
        assert occ.start + occ.length == len(word)
        assert expand(p, occ.witness(word), occ.involution) == occ.factor(word)
