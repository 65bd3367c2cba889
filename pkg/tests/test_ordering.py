import pytest
from hypothesis import given, strategies as st

from sindhikit import ordering
from sindhikit.charset import Direction
from sindhikit.ordering import Run

SINDHI_WORD = "سنڌي"
MIXED = SINDHI_WORD + " 2011"

RTL_ALPHABET = "سنڌيبلاَ۽"
LTR_ALPHABET = "abcXYZ"
FULL_ALPHABET = RTL_ALPHABET + LTR_ALPHABET + "0123456789 .,!"

rtl_text = st.text(alphabet=RTL_ALPHABET, min_size=1, max_size=30)
ltr_text = st.text(alphabet=LTR_ALPHABET, min_size=1, max_size=30)
any_text = st.text(alphabet=FULL_ALPHABET, max_size=30)


def test_homogeneous_rtl_is_one_run():
    assert ordering.segment_runs(SINDHI_WORD) == [Run(0, 4, Direction.RTL)]


def test_empty_line():
    assert ordering.segment_runs("") == []
    assert ordering.logical_to_visual("") == []


def test_mixed_runs():
    # the space sits between disagreeing flanks, so it takes the RTL base
    assert ordering.segment_runs(MIXED) == [
        Run(0, 5, Direction.RTL),
        Run(5, 4, Direction.LTR),
    ]


def test_neutral_between_ltr_flanks_stays_ltr():
    assert ordering.segment_runs("ab cd") == [Run(0, 5, Direction.LTR)]


def test_trailing_neutral_takes_base():
    assert ordering.segment_runs("ab ") == [
        Run(0, 2, Direction.LTR),
        Run(2, 1, Direction.RTL),
    ]


def test_all_neutral_line_is_rtl():
    assert ordering.segment_runs(" .. ") == [Run(0, 4, Direction.RTL)]


def test_newline_rejected():
    with pytest.raises(ValueError):
        ordering.segment_runs("a\nb")


def test_visual_order_pure_rtl_is_reverse():
    assert ordering.logical_to_visual(SINDHI_WORD) == [3, 2, 1, 0]


def test_visual_order_single_char():
    assert ordering.logical_to_visual("س") == [0]


def test_visual_order_mixed():
    # digits end up leftmost, kept in 2,0,1,1 order
    assert ordering.logical_to_visual(MIXED) == [5, 6, 7, 8, 4, 3, 2, 1, 0]


@given(rtl_text)
def test_rtl_purity(text):
    assert ordering.logical_to_visual(text) == list(reversed(range(len(text))))


@given(ltr_text)
def test_ltr_purity(text):
    assert ordering.logical_to_visual(text) == list(range(len(text)))


@given(any_text)
def test_permutation_is_bijection(text):
    perm = ordering.logical_to_visual(text)
    assert sorted(perm) == list(range(len(text)))


@given(any_text)
def test_runs_partition_line(text):
    runs = ordering.segment_runs(text)
    pos = 0
    for k, run in enumerate(runs):
        assert run.start == pos
        assert run.length >= 1
        if k:
            assert run.direction is not runs[k - 1].direction
        pos = run.stop
    assert pos == len(text)


@given(any_text, st.data())
def test_insert_preserves_untouched_run_order(text, data):
    i = data.draw(st.integers(min_value=0, max_value=len(text)))
    ch = data.draw(st.sampled_from(FULL_ALPHABET))
    edited = text[:i] + ch + text[i:]

    runs = ordering.segment_runs(text)
    touched = set()
    for run in runs:
        if (i > 0 and run.start <= i - 1 < run.stop) or run.start <= i < run.stop:
            touched.update(range(run.start, run.stop))
    untouched = [j for j in range(len(text)) if j not in touched]

    before = [j for j in ordering.logical_to_visual(text) if j in untouched]
    mapped = {(j if j < i else j + 1): j for j in untouched}
    after = [
        mapped[j] for j in ordering.logical_to_visual(edited) if j in mapped
    ]
    assert before == after


def test_caret_empty_line():
    assert ordering.caret_visual_position("", 0) == 0


def test_caret_pure_rtl():
    # typing proceeds leftward: boundary 4 before anything, 0 after all four
    assert ordering.caret_visual_position(SINDHI_WORD, 0) == 4
    assert ordering.caret_visual_position(SINDHI_WORD, 1) == 3
    assert ordering.caret_visual_position(SINDHI_WORD, 4) == 0


def test_caret_pure_ltr():
    assert [ordering.caret_visual_position("abc", i) for i in range(4)] == [0, 1, 2, 3]


def test_caret_mixed():
    # hand-walked: RTL run occupies visual [4,9), digits visual [0,4)
    line = MIXED
    assert ordering.caret_visual_position(line, 0) == 9
    assert ordering.caret_visual_position(line, 5) == 4
    assert ordering.caret_visual_position(line, 6) == 1
    assert ordering.caret_visual_position(line, 9) == 4


def test_caret_out_of_range():
    with pytest.raises(IndexError):
        ordering.caret_visual_position("ab", 3)
    with pytest.raises(IndexError):
        ordering.caret_visual_position("ab", -1)


@given(any_text.filter(lambda s: len(s) > 0))
def test_caret_monotone_within_each_run(text):
    for run in ordering.segment_runs(text):
        positions = [
            ordering.caret_visual_position(text, i)
            for i in range(run.start + 1, run.stop + 1)
        ]
        if run.direction is Direction.RTL:
            assert positions == sorted(positions, reverse=True)
        else:
            assert positions == sorted(positions)
        assert len(set(positions)) == len(positions)
