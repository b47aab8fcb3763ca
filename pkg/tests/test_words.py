from hypothesis import given, strategies as st

from covercalc import EMPTY, MINUS_FIRST, PLUS_FIRST, Word, all_words

words = st.text(alphabet="+-", max_size=6).map(Word)


def test_concat_examples():
    assert Word("+").concat(Word("-")) == Word("+-")
    assert EMPTY + Word("+-+") == Word("+-+")
    assert Word("+-") + Word("-+") == Word("+--+")


@given(words, words, words)
def test_concat_associative_with_unit(u, v, w):
    assert (u + v) + w == u + (v + w)
    assert u + EMPTY == EMPTY + u == u
    assert len(u + v) == len(u) + len(v)


def test_subword_examples():
    assert Word("+-").is_subword_of(Word("+-+"))
    assert not Word("+-").is_subword_of(Word("-+"))
    for w in all_words(4):
        assert EMPTY.is_subword_of(w)


def test_subword_divergence_from_unordered_injection():
    # An order-forgetting injection would embed "+-" into "-+" (match the '+'
    # to position 1 and the '-' to position 0); the subsequence order refuses.
    v, w = Word("+-"), Word("-+")
    assert sorted(v.letters) == sorted(w.letters)
    assert not v.is_subword_of(w) and not w.is_subword_of(v)


def test_subword_partial_order_on_short_words():
    pool = all_words(5)
    for v in pool:
        assert v.is_subword_of(v)
    for v in pool:
        for w in pool:
            if v.is_subword_of(w) and w.is_subword_of(v):
                assert v == w
    shorter = all_words(3)
    for u in shorter:
        for v in shorter:
            if not u.is_subword_of(v):
                continue
            for w in shorter:
                if v.is_subword_of(w):
                    assert u.is_subword_of(w)


def test_alternation_examples():
    assert Word.alternating(PLUS_FIRST, 0) == EMPTY
    assert Word.alternating(MINUS_FIRST, 0) == EMPTY
    assert Word.alternating(PLUS_FIRST, 3) == Word("+-+")
    assert Word.alternating(MINUS_FIRST, 2) == Word("-+")


@given(st.sampled_from([PLUS_FIRST, MINUS_FIRST]), st.integers(0, 12))
def test_alternation_properties(sign, n):
    w = Word.alternating(sign, n)
    assert len(w) == n
    assert w.alternates()
    assert w.is_subword_of(Word.alternating(sign, n + 2))


def test_collapse_runs_examples():
    assert Word("++---+").collapse_runs() == Word("+-+")
    assert Word("+-+").collapse_runs() == Word("+-+")
    assert EMPTY.collapse_runs() == EMPTY


@given(words)
def test_collapse_runs_properties(w):
    collapsed = w.collapse_runs()
    assert collapsed.collapse_runs() == collapsed
    assert collapsed.alternates()
    assert collapsed.is_subword_of(w)


def test_rendering_and_parsing():
    assert str(EMPTY) == "e"
    assert str(Word("+-+")) == "+-+"
    assert Word.parse("e") == EMPTY
    assert Word.parse("") == EMPTY
    assert Word.parse("-+") == Word("-+")


def test_rejects_foreign_letters():
    import pytest

    with pytest.raises(ValueError):
        Word("+x-")


def test_all_words_count():
    assert len(all_words(3)) == 1 + 2 + 4 + 8
