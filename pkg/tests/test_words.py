import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbifat.words import (
    CyclicWord,
    ElementClass,
    GenAlphabet,
    Letter,
    WordSyntaxError,
    c,
    canonical_rotation,
    classify,
    cyclic_reduce,
    format_compact,
    format_word,
    free_reduce,
    inverse,
    is_reduced,
    least_rotation,
    parse_word,
    z,
    z_exponent_sums,
)

from conftest import disk334, genus_cone3, realization_and_word, realizations, words

A = GenAlphabet(2, (3, 3, 4))


def w(text, a=A):
    return parse_word(text, a)


# ---------------------------------------------------------------- parsing


def test_parse_expands_powers_and_inverses():
    assert w("z0^2 Z1 c2^-1") == (z(0), z(0), z(1, -1), c(2), c(2), c(2))
    assert w("z0^-2") == (z(0, -1), z(0, -1))


def test_letter_order_is_canonical():
    assert sorted([c(0), z(1), z(0, -1), z(0), c(1)]) == [z(0), z(0, -1), z(1), c(0), c(1)]


def test_format_round_trip():
    word = w("z0 c1 c1 Z1 c0")
    assert parse_word(format_word(word), A) == word
    assert format_compact(w("c0 c1^2 c2 c1")) == "c0 c1^2 c2 c1"


@pytest.mark.parametrize("bad", ["x0", "z", "c9", "z0^", "z5"])
def test_parse_rejects_bad_tokens(bad):
    with pytest.raises(WordSyntaxError):
        parse_word(bad, A)


def test_alphabet_invariants():
    with pytest.raises(ValueError):
        GenAlphabet(1, (1,))
    with pytest.raises(ValueError):
        GenAlphabet(0, ())


# -------------------------------------------------------------- reduction


def test_full_cancellation():
    assert free_reduce(w("z0 z1 Z1 Z0"), A) == ()


def test_relator_vanishes():
    assert free_reduce(w("c2 c2 c2 c2"), A) == ()


def test_reduced_word_unchanged():
    word = w("c0 c1 c1 c2 c1")
    assert free_reduce(word, A) == word
    assert is_reduced(word, A)


def test_nested_cancellation():
    assert free_reduce(w("z0 c0 c0 z1 Z1 c0 Z0"), A) == ()


def test_inverse_of_finite_letter():
    assert inverse(w("z0 c2"), A) == w("c2 c2 c2 Z0")


@given(words(A, 16))
def test_free_reduce_idempotent(word):
    once = free_reduce(word, A)
    assert free_reduce(once, A) == once
    assert is_reduced(once, A)


@given(words(A, 10), words(A, 10))
def test_free_reduce_is_monoid_compatible(u, v):
    assert free_reduce(u + free_reduce(v, A), A) == free_reduce(u + v, A)


@given(words(A, 12))
def test_word_times_inverse_is_trivial(word):
    assert free_reduce(word + inverse(word, A), A) == ()


@given(words(A, 12))
def test_reduced_words_have_no_long_runs(word):
    red = free_reduce(word, A)
    for x, y in zip(red, red[1:]):
        assert not (x.kind == 0 and y == x.inv())
    run = 1
    for x, y in zip(red, red[1:]):
        run = run + 1 if (x == y and x.kind == 1) else 1
        if x.kind == 1 and x == y:
            assert run < A.order(x)


# ----------------------------------------------------------------- cyclic


def test_cyclic_reduce_conjugate_of_letter():
    core, conj = cyclic_reduce(w("z0 c0 Z0"), A)
    assert core.letters == (c(0),)
    assert conj == (z(0),)


def test_cyclic_reduce_fixed_point():
    core, conj = cyclic_reduce(w("z0 z1"), A)
    assert core.letters == w("z0 z1") and conj == ()


def test_cyclic_reduce_example():
    core, conj = cyclic_reduce(w("Z1 z0 z1 z1"), A)
    assert core == CyclicWord.of(w("z0 z1"))
    assert free_reduce(conj + core.letters + inverse(conj, A), A) == w("Z1 z0 z1 z1")


@given(words(A, 14))
def test_cyclic_reduce_round_trip(word):
    core, conj = cyclic_reduce(word, A)
    assert free_reduce(conj + core.letters + inverse(conj, A), A) == free_reduce(word, A)
    seq = core.letters
    if len(seq) > 1:
        assert is_reduced(seq + seq, A) or seq[0].kind == 1 and all(x == seq[0] for x in seq)


@given(st.lists(st.integers(0, 3), max_size=20))
def test_least_rotation_matches_brute_force(seq):
    rots = [tuple(seq[i:] + seq[:i]) for i in range(len(seq))] or [()]
    assert canonical_rotation(seq) == min(rots)
    if seq:
        k = least_rotation(seq)
        assert tuple(seq[k:] + seq[:k]) == min(rots)


# -------------------------------------------------------------- classify


def test_classify_examples():
    r = genus_cone3()
    a = r.alphabet
    assert classify(parse_word("z0", a), r) is ElementClass.HYPERBOLIC
    assert classify(parse_word("c0", a), r) is ElementClass.ELLIPTIC
    assert classify((), r) is ElementClass.IDENTITY
    b = r.boundary.letters
    assert classify(b * 3, r) is ElementClass.PARABOLIC
    assert classify(inverse(b, a) * 2, r) is ElementClass.PARABOLIC


def test_classify_elliptic_power():
    r = disk334()
    a = r.alphabet
    assert classify(parse_word("c2^2", a), r) is ElementClass.ELLIPTIC
    g = genus_cone3()
    assert classify(parse_word("z0 z1", g.alphabet), g) is ElementClass.HYPERBOLIC


@given(realization_and_word(balanced=False), st.data())
def test_classify_conjugation_invariant(rw, data):
    r, word = rw
    g = data.draw(words(r.alphabet, 6))
    conj = g + word + inverse(g, r.alphabet)
    assert classify(conj, r) is classify(word, r)


@given(realizations)
def test_boundary_word_is_parabolic(r):
    assert classify(r.boundary.letters, r) is ElementClass.PARABOLIC


# ------------------------------------------------------------ z exponents


def test_z_exponent_sums():
    assert z_exponent_sums(w("z0 c0 Z0 c0"), A) == (0, 0)
    assert z_exponent_sums(w("z0 z0"), A) == (2, 0)
    assert z_exponent_sums((), A) == (0, 0)


def test_letter_inverse():
    assert z(0).inv() == z(0, -1)
    assert c(1).inv() == c(1)
    assert str(Letter(0, 3, True)) == "Z3"
