"""Alternating plat diagrams from model words, by the combinatorial shortcut.

Each run of a model word becomes one crossing of an alternating 3-strand
plat diagram: a (sign, run length) pair maps to a braid generator

    (+,1) -> s1    (+,2) -> s2^-1    (-,1) -> s2^-1    (-,2) -> s1

where s1 sits at the lower height (strands 1-2) and s2^-1 at the upper
height (strands 2-3).  Crossing i inherits the start position of its run
inside the letter word, and that position mod 3 alone decides how the
orientation smooths the crossing:

    single run:  horizontal iff start = 1 (mod 3)
    double run:  horizontal iff start = 2 (mod 3)

A vertically-smoothed crossing is viable when the next vertical crossing
sits at the same height, or when it is the last vertical crossing; the
Seifert circle count of the diagram is then exactly 2 + #viable.  All of
this is pure run arithmetic; the planar module re-derives the same
quantities from an actual diagram traversal and the two are checked
against each other.
"""

from dataclasses import dataclass, replace

from . import rational
from .words import PLUS, RunWord, from_runs, is_palindromic_type

SIGMA1 = "s1"
SIGMA2_INV = "s2^-1"
V = "V"
H = "H"

_GENERATOR = {
    (True, 1): SIGMA1,
    (True, 2): SIGMA2_INV,
    (False, 1): SIGMA2_INV,
    (False, 2): SIGMA1,
}


class ParityError(ValueError):
    """1 - s + c came out odd or negative; upstream produced a non-knot."""


@dataclass(frozen=True)
class CrossingInfo:
    index: int          # 1-based, left to right
    generator: str      # SIGMA1 or SIGMA2_INV
    run_sign: str
    run_length: int
    start_position: int  # 1-based position of the run's first letter
    smoothing: str = None
    viable: bool = None
    sequential: bool = None


@dataclass(frozen=True)
class AlternatingDiagram:
    run_word: RunWord
    crossings: tuple

    @property
    def c(self):
        return len(self.crossings)

    def vertical_indices(self):
        return [x.index for x in self.crossings if x.smoothing == V]

    def viable_indices(self):
        return [x.index for x in self.crossings if x.viable]

    def sequential_indices(self):
        return [x.index for x in self.crossings if x.sequential]

    def smoothing_string(self):
        return "".join(x.smoothing for x in self.crossings)

    def folded_generators(self):
        """Adjacent equal generators folded to (generator, count) pairs."""
        folded = []
        for x in self.crossings:
            if folded and folded[-1][0] == x.generator:
                folded[-1][1] += 1
            else:
                folded.append([x.generator, 1])
        return [(g, k) for g, k in folded]

    def exponents(self):
        """Exponent counts of the folded word; s1^3 s2^-1 s1 s2^-1 gives
        [3, 1, 1, 1].  These are the continued fraction entries of the knot.
        """
        return [k for _, k in self.folded_generators()]

    def alternating_word(self):
        """Render the braid word, e.g. "s1^3 s2^-1 s1 s2^-1"."""
        parts = []
        for g, k in self.folded_generators():
            if g == SIGMA1:
                parts.append("s1" if k == 1 else f"s1^{k}")
            else:
                parts.append(f"s2^-{k}")
        return " ".join(parts)


def to_alternating(r):
    """Build the alternating diagram of a model word: one crossing per run,
    generators per the sign/length table, start positions cumulative.
    """
    if not r.is_model:
        raise ValueError(f"not a model word: {r}")
    crossings = []
    start = 1
    for i, e in enumerate(r.runs):
        gen = _GENERATOR[(r.sign(i) == PLUS, e)]
        crossings.append(CrossingInfo(
            index=i + 1,
            generator=gen,
            run_sign=r.sign(i),
            run_length=e,
            start_position=start,
        ))
        start += e
    return AlternatingDiagram(r, tuple(crossings))


def classify_smoothings(d):
    """Set each crossing's smoothing from its start position mod 3."""
    crossings = []
    for x in d.crossings:
        if x.run_length == 1:
            sm = H if x.start_position % 3 == 1 else V
        else:
            sm = H if x.start_position % 3 == 2 else V
        crossings.append(replace(x, smoothing=sm))
    return AlternatingDiagram(d.run_word, tuple(crossings))


def mark_viability(d):
    """Set viable/sequential on every vertical crossing.

    Viable: the next vertical crossing (in index order) has the same
    generator, or there is none.  Sequential: the immediately following
    crossing is vertical with the same generator, which forces viability
    of this one but is strictly stronger.
    """
    verts = [x for x in d.crossings if x.smoothing == V]
    next_vert = {}
    for a, b in zip(verts, verts[1:]):
        next_vert[a.index] = b
    crossings = []
    for x in d.crossings:
        if x.smoothing != V:
            crossings.append(replace(x, viable=False, sequential=False))
            continue
        nxt = next_vert.get(x.index)
        viable = nxt is None or nxt.generator == x.generator
        sequential = (
            x.index < d.c
            and d.crossings[x.index].smoothing == V
            and d.crossings[x.index].generator == x.generator
        )
        crossings.append(replace(x, viable=viable, sequential=sequential))
    return AlternatingDiagram(d.run_word, tuple(crossings))


def seifert_circle_count(d):
    """s = 2 + number of viable vertical crossings."""
    return 2 + sum(1 for x in d.crossings if x.viable)


def seifert_bounds(d):
    """(2 + #sequential, 2 + #vertical); the circle count lies between."""
    seq = sum(1 for x in d.crossings if x.sequential)
    vert = sum(1 for x in d.crossings if x.smoothing == V)
    return 2 + seq, 2 + vert


def genus(s, c):
    """Genus of an alternating knot from circle count and crossing number."""
    n = 1 - s + c
    if n < 0 or n % 2:
        raise ParityError(f"1 - s + c = {n} is not a nonnegative even number")
    return n // 2


def full_diagram(r):
    """to_alternating + classify_smoothings + mark_viability in one call."""
    return mark_viability(classify_smoothings(to_alternating(r)))


@dataclass(frozen=True)
class WordAnalysis:
    word: str
    runs: RunWord
    alternating: str
    smoothings: str
    vertical: int
    viable: int
    sequential: int
    s: int
    s_lower: int
    s_upper: int
    genus: int
    p: int
    q: int
    name: str
    palindromic: bool

    CSV_COLUMNS = (
        "word", "runs", "alternating", "smoothings", "vertical", "viable",
        "sequential", "s", "s_lower", "s_upper", "genus", "p", "q", "name",
        "palindromic",
    )

    def csv_row(self):
        return [
            self.word,
            " ".join(str(e) for e in self.runs.runs),
            self.alternating,
            self.smoothings,
            str(self.vertical),
            str(self.viable),
            str(self.sequential),
            str(self.s),
            str(self.s_lower),
            str(self.s_upper),
            str(self.genus),
            str(self.p),
            str(self.q),
            self.name or "",
            "true" if self.palindromic else "false",
        ]

    def to_json(self):
        return {
            "word": self.word,
            "runs": self.runs.to_json(),
            "alternating": self.alternating,
            "smoothings": self.smoothings,
            "vertical": self.vertical,
            "viable": self.viable,
            "sequential": self.sequential,
            "s": self.s,
            "s_lower": self.s_lower,
            "s_upper": self.s_upper,
            "genus": self.genus,
            "p": self.p,
            "q": self.q,
            "name": self.name,
            "palindromic": self.palindromic,
        }


def analyze(r):
    """Full per-word record: diagram counts, genus, fraction, knot name."""
    d = full_diagram(r)
    s = seifert_circle_count(d)
    lo, hi = seifert_bounds(d)
    g = genus(s, d.c)
    frac = rational.continued_fraction(d.exponents())
    cc = rational.canonical_class(frac)
    return WordAnalysis(
        word=from_runs(r),
        runs=r,
        alternating=d.alternating_word(),
        smoothings=d.smoothing_string(),
        vertical=len(d.vertical_indices()),
        viable=s - 2,
        sequential=lo - 2,
        s=s,
        s_lower=lo,
        s_upper=hi,
        genus=g,
        p=frac.p,
        q=frac.q,
        name=rational.knot_name(cc),
        palindromic=is_palindromic_type(r),
    )
