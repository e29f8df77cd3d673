"""Billiard table words and their reduction to run form.

A billiard table word is a string over the alphabet {+, -}.  Closing the
3-strand billiard trajectory it describes gives a knot exactly when the
word length is not 2 mod 3; the knots arising this way are the 2-bridge
knots.  Three moves shorten a word without changing the closure:

    internal  delete three consecutive identical letters anywhere
    start     delete a leading  "++-" or "--+"
    end       delete a trailing "-++" or "+--"

Each move removes exactly three letters, so length mod 3 is invariant.
A fixpoint of length >= 3 always consists of maximal runs of length 1 or
2 whose first and last runs are single letters; such words live here in
run-length form (RunWord).  The canonical representatives everything
downstream consumes ("model words") additionally have first sign +,
length congruent to 1 mod 3, and at least 3 runs.  Every 2-bridge knot
with crossing number c is realized by exactly two model words with c
runs, or one when the run vector is its own reversal.
"""

import itertools
import random
import warnings
from dataclasses import dataclass

PLUS = "+"
MINUS = "-"
_ALPHABET = {PLUS, MINUS}
_MIRROR = str.maketrans("+-", "-+")

# classification kinds returned by normalize_to_model
MODEL = "model"
UNKNOT = "unknot"
LINK = "link"


class WordSyntaxError(ValueError):
    """Text is not a billiard table word."""


class NotReducedForm(ValueError):
    """Word is not in reduced run form (runs of 1 or 2, single-letter ends)."""


def parse_word(text):
    """Parse text into a word over {+, -}; whitespace is ignored.

    >>> parse_word(" +- -+ ")
    '+--+'
    """
    out = []
    for pos, ch in enumerate(text):
        if ch in _ALPHABET:
            out.append(ch)
        elif not ch.isspace():
            raise WordSyntaxError(f"invalid character {ch!r} at position {pos}")
    return "".join(out)


def mirror(word):
    """Swap + and - throughout.

    >>> mirror("+--+")
    '-++-'
    """
    return word.translate(_MIRROR)


def reverse(word):
    """Reverse the letter order."""
    return word[::-1]


_START = ("++-", "--+")
_END = ("-++", "+--")


def _one_move(w):
    # leftmost internal move first, then start-external, then end-external
    for i in range(len(w) - 2):
        if w[i] == w[i + 1] == w[i + 2]:
            return w[:i] + w[i + 3:]
    if w[:3] in _START:
        return w[3:]
    if w[-3:] in _END:
        return w[:-3]
    return None


def reduce(word):
    """Apply reduction moves until none applies.

    The move order (leftmost internal, then the two external moves) is
    fixed for determinism; all orders reach the same fixpoint, which the
    test suite confirms exhaustively at small lengths.

    >>> reduce("+++")
    ''
    >>> reduce("++-+")
    '+'
    >>> reduce("+--+-+-")
    '+--+-+-'
    """
    while True:
        nxt = _one_move(word)
        if nxt is None:
            return word
        word = nxt


def is_reduced(word):
    return _one_move(word) is None


def _other(sign):
    return MINUS if sign == PLUS else PLUS


@dataclass(frozen=True)
class RunWord:
    """Run-length form of a reduced word: first run's sign plus run lengths.

    Signs alternate, so runs[i] carries first_sign flipped i times.  The
    number of runs equals the crossing number of the alternating diagram
    the word produces, which is why it is called c throughout.
    """

    first_sign: str
    runs: tuple

    def __post_init__(self):
        if self.first_sign not in _ALPHABET:
            raise NotReducedForm(f"first sign must be + or -: {self.first_sign!r}")
        if not self.runs:
            raise NotReducedForm("empty run vector")
        if any(e not in (1, 2) for e in self.runs):
            raise NotReducedForm(f"run lengths must be 1 or 2: {self.runs}")
        if self.runs[0] != 1 or self.runs[-1] != 1:
            raise NotReducedForm(f"first and last runs must be single letters: {self.runs}")

    @property
    def c(self):
        return len(self.runs)

    @property
    def length(self):
        return sum(self.runs)

    @property
    def doubles(self):
        return sum(1 for e in self.runs if e == 2)

    def sign(self, i):
        """Sign of run i, 0-based."""
        return self.first_sign if i % 2 == 0 else _other(self.first_sign)

    @property
    def is_model(self):
        return self.first_sign == PLUS and self.c >= 3 and self.length % 3 == 1

    def to_json(self):
        return {"first_sign": self.first_sign, "runs": list(self.runs)}


def to_runs(word):
    """Run-length encode a reduced word.

    >>> to_runs("+--+-+-")
    RunWord(first_sign='+', runs=(1, 2, 1, 1, 1, 1))
    """
    if not word:
        raise NotReducedForm("empty word has no run form")
    runs = tuple(len(list(g)) for _, g in itertools.groupby(word))
    return RunWord(word[0], runs)


def from_runs(r):
    """Expand runs back into letters; inverse of to_runs.

    >>> from_runs(RunWord("+", (1, 2, 1)))
    '+--+'
    """
    sign = r.first_sign
    parts = []
    for n in r.runs:
        parts.append(sign * n)
        sign = _other(sign)
    return "".join(parts)


def toggle_interior(r):
    """Swap interior run lengths 1 <-> 2; the ends stay single letters.

    The word and its toggle have lengths summing to 3c - 2, so lengths 0
    and 1 mod 3 swap.  Both describe the same knot.
    """
    if r.c < 2:
        return r
    interior = tuple(3 - e for e in r.runs[1:-1])
    return RunWord(r.first_sign, (1,) + interior + (1,))


def is_palindromic_type(r):
    """True when the run vector is its own reversal.

    These are exactly the words the enumeration sees once instead of
    twice: reversing the underlying letters (plus a mirror when c is
    even, since reversal then flips the first sign) gives back the same
    model word.
    """
    return r.runs == r.runs[::-1]


def double_counts(c):
    """Interior double counts d with c + d = 1 mod 3 and 0 <= d <= c - 2."""
    return range((1 - c) % 3, c - 1, 3)


def enumerate_model_words(c):
    """Yield every model word with c runs in a fixed deterministic order:
    grouped by increasing number of doubles, double positions in
    lexicographic order.

    >>> [from_runs(r) for r in enumerate_model_words(3)]
    ['+--+']
    """
    if c < 3:
        raise ValueError(f"model words need at least 3 runs, got c={c}")
    for d, first in enumeration_tasks(c):
        yield from expand_task(c, d, first)


def enumeration_tasks(c):
    """Split the c enumeration into independent units (d, first_double).

    Expanding the units in list order with expand_task reproduces
    enumerate_model_words(c) exactly; the units can also be handed to
    worker processes, since any aggregation downstream is a sum.
    """
    if c < 3:
        raise ValueError(f"model words need at least 3 runs, got c={c}")
    tasks = []
    for d in double_counts(c):
        if d == 0:
            tasks.append((0, None))
        else:
            # smallest double position ranges over interior slots that
            # leave room for the remaining d-1 doubles
            tasks.extend((d, first) for first in range(1, c - d))
    return tasks


def expand_task(c, d, first):
    """Yield the model words of one enumeration unit from enumeration_tasks."""
    base = [1] * c
    if d == 0:
        yield RunWord(PLUS, tuple(base))
        return
    for rest in itertools.combinations(range(first + 1, c - 1), d - 1):
        runs = base.copy()
        runs[first] = 2
        for j in rest:
            runs[j] = 2
        yield RunWord(PLUS, tuple(runs))


@dataclass(frozen=True)
class Normalized:
    """Outcome of normalize_to_model; kind is MODEL, UNKNOT or LINK."""

    kind: str
    run_word: RunWord | None = None


def normalize_to_model(word):
    """Classify a word and, when it closes to a nontrivial knot, produce
    its model representative.

    Reduction preserves the closure.  Reduced length <= 1 closes to the
    unknot; reduced length 2 mod 3 closes to a 2-component link, which
    this model does not cover.  Anything else is brought to first sign +
    (mirror) and length 1 mod 3 (toggle_interior); both steps preserve
    the knot up to mirror image.

    >>> normalize_to_model("+++").kind
    'unknot'
    >>> normalize_to_model("-++-+-+").run_word
    RunWord(first_sign='+', runs=(1, 2, 1, 1, 1, 1))
    >>> normalize_to_model("+-").kind
    'link'
    """
    w = reduce(parse_word(word))
    if len(w) <= 1:
        return Normalized(UNKNOT)
    if len(w) % 3 == 2:
        return Normalized(LINK)
    if w[0] == MINUS:
        w = mirror(w)
    r = to_runs(w)
    if r.length % 3 == 0:
        r = toggle_interior(r)
    assert r.is_model, r
    return Normalized(MODEL, r)


def sample(n, count, seed):
    """Deterministic uniform sampling of count words from {+,-}^n.

    Lengths 2 mod 3 close to 2-component links, so no knot statistics
    can come out of them; a warning flags that case.
    """
    if n < 1:
        raise ValueError("word length must be >= 1")
    if count < 0:
        raise ValueError("count must be >= 0")
    if n % 3 == 2:
        warnings.warn(f"length {n} is 2 mod 3: every sampled closure is a 2-component link")
    rng = random.Random(seed)
    return _sample_stream(rng, n, count)


def _sample_stream(rng, n, count):
    for _ in range(count):
        yield "".join(rng.choice("+-") for _ in range(n))
