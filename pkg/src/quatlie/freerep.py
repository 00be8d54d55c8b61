"""Generator action on the truncated word space of lowering operators.

The word space has one basis element per pair (flag, word) where the
word ranges over sequences in {0..l-1} up to the truncation degree and
the flag marks a leading J.  The six generator kinds act by:

  on a plain word w = (i_1..i_t):
    h_j  ->  -(c[i_1][j] + ... + c[i_t][j]) * w
    f_j  ->  (j, i_1..i_t)
    e_j  ->  -sum_k delta(j, i_k) (sum_{h>k} c[i_h][j]) * (w minus i_k)
    Jh_j, Jf_j, Je_j -> same coefficients, result flagged

  on a flagged word Jw:
    h_j, f_j, e_j  ->  same as above, flag kept
    Jh_j ->  +(c[i_1][j] + ... + c[i_t][j]) * w, flag cleared
    Jf_j ->  -(j, i_1..i_t), flag cleared
    Je_j ->  +sum_k delta(j, i_k) (sum_{h>k} c[i_h][j]) * (w minus i_k), flag cleared

The empty word is included at both flags, so the inner sums above are
well defined (they are empty) and lowering operators annihilate it.
Raising beyond the degree cap either raises or, when an overflow
collector is supplied, drops the term and records the word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import TruncationOverflowError
from .linalg import SpanBasis, Vec
from .rootsystem import CartanMatrix

GENERATOR_KINDS = ("h", "e", "f", "Jh", "Je", "Jf")


@dataclass(frozen=True)
class FreeWord:
    j_flag: bool
    indices: tuple

    @property
    def length(self) -> int:
        return len(self.indices)

    def label(self) -> str:
        body = "".join(f"f{i + 1}" for i in self.indices) or "1"
        return f"J.{body}" if self.j_flag else body


Combo = dict  # {FreeWord: Fraction}


def _add_term(combo: Combo, word: FreeWord, coeff: Fraction) -> None:
    if not coeff:
        return
    acc = combo.get(word, Fraction(0)) + coeff
    if acc:
        combo[word] = acc
    else:
        combo.pop(word, None)


def rho_apply(
    kind: str,
    j: int,
    word: FreeWord,
    cm: CartanMatrix,
    degree_cap: int,
    overflow: list | None = None,
) -> Combo:
    """Image of a single word under one generator, as a word combination."""
    if kind not in GENERATOR_KINDS:
        raise ValueError(f"unknown generator kind {kind!r}")
    c = cm.entries
    idx = word.indices
    flagged = word.j_flag
    tagged = kind.startswith("J")
    base = kind[-1]
    out_flag = flagged ^ tagged
    # sign of the coefficient blocks when a tagged generator meets a
    # flagged word (the J squared case)
    jj = tagged and flagged
    out: Combo = {}
    if base == "h":
        total = sum(c[i][j] for i in idx)
        coeff = Fraction(total if jj else -total)
        _add_term(out, FreeWord(out_flag, idx), coeff)
    elif base == "f":
        if word.length >= degree_cap:
            if overflow is None:
                raise TruncationOverflowError(
                    f"raising past degree {degree_cap} on {word.label()}"
                )
            overflow.append(word)
            return out
        coeff = Fraction(-1 if jj else 1)
        _add_term(out, FreeWord(out_flag, (j,) + idx), coeff)
    else:  # base == "e"
        for k in range(len(idx)):
            if idx[k] != j:
                continue
            inner = sum(c[idx[h]][j] for h in range(k + 1, len(idx)))
            coeff = Fraction(inner if jj else -inner)
            _add_term(out, FreeWord(out_flag, idx[:k] + idx[k + 1 :]), coeff)
    return out


def rho_apply_combo(
    kind: str,
    j: int,
    combo: Combo,
    cm: CartanMatrix,
    degree_cap: int,
    overflow: list | None = None,
) -> Combo:
    out: Combo = {}
    for word, coeff in combo.items():
        for res_word, res_coeff in rho_apply(
            kind, j, word, cm, degree_cap, overflow
        ).items():
            _add_term(out, res_word, coeff * res_coeff)
    return out


@dataclass(frozen=True)
class RhoOperator:
    """One generator's action on the truncated word space.

    The h operators preserve word length, f operators raise it by one
    and e operators lower it by one; tagged operators additionally flip
    the flag.  `sparse_action` materializes the (still sparse) table,
    keyed by input word.
    """

    kind: str
    index: int
    cartan: CartanMatrix
    degree_cap: int

    def apply(self, word: FreeWord, overflow: list | None = None) -> Combo:
        return rho_apply(
            self.kind, self.index, word, self.cartan, self.degree_cap, overflow
        )

    def apply_combo(self, combo: Combo, overflow: list | None = None) -> Combo:
        return rho_apply_combo(
            self.kind, self.index, combo, self.cartan, self.degree_cap, overflow
        )

    def sparse_action(self, max_length: int) -> dict:
        return {
            word: self.apply(word)
            for word in all_words(self.cartan.rank, max_length)
            if self.kind[-1] != "f" or word.length < self.degree_cap
        }


def all_words(rank: int, max_length: int) -> list[FreeWord]:
    """Every word up to the given length, both flags, in a fixed order."""
    out = []
    for flag in (False, True):
        for length in range(max_length + 1):
            for idx in itertools.product(range(rank), repeat=length):
                out.append(FreeWord(flag, idx))
    return out


# ---------------------------------------------------------------------------
# Family checks
# ---------------------------------------------------------------------------

# name, left kind, right kind, optional target: (kind, index role, sign, rule)
# where rule "delta" means delta_ij acting via index i and rule "cji"
# means the Cartan entry c[j][i] acting via index j.
FAMILIES = (
    ("h.h", "h", "h", None),
    ("e.f", "e", "f", ("h", "i", 1, "delta")),
    ("h.e", "h", "e", ("e", "j", 1, "cji")),
    ("h.f", "h", "f", ("f", "j", -1, "cji")),
    ("h.Jh", "h", "Jh", None),
    ("Jh.h", "Jh", "h", None),
    ("Jh.Jh", "Jh", "Jh", None),
    ("Je.f", "Je", "f", ("Jh", "i", 1, "delta")),
    ("e.Jf", "e", "Jf", ("Jh", "i", 1, "delta")),
    ("Je.Jf", "Je", "Jf", ("h", "i", -1, "delta")),
    ("h.Je", "h", "Je", ("Je", "j", 1, "cji")),
    ("Jh.e", "Jh", "e", ("Je", "j", 1, "cji")),
    ("Jh.Je", "Jh", "Je", ("e", "j", -1, "cji")),
    ("h.Jf", "h", "Jf", ("Jf", "j", -1, "cji")),
    ("Jh.f", "Jh", "f", ("Jf", "j", -1, "cji")),
    ("Jh.Jf", "Jh", "Jf", ("f", "j", 1, "cji")),
)


@dataclass
class FamilyReport:
    family: str
    instances_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def _family_defect(
    kind_a: str,
    kind_b: str,
    target,
    i: int,
    j: int,
    word: FreeWord,
    cm: CartanMatrix,
    cap: int,
) -> Combo:
    start = {word: Fraction(1)}
    left = rho_apply_combo(kind_a, i, rho_apply_combo(kind_b, j, start, cm, cap), cm, cap)
    right = rho_apply_combo(kind_b, j, rho_apply_combo(kind_a, i, start, cm, cap), cm, cap)
    defect: Combo = dict(left)
    for w, coeff in right.items():
        _add_term(defect, w, -coeff)
    if target is not None:
        kind_t, role, sign, rule = target
        if rule == "delta":
            coeff = Fraction(sign) if i == j else Fraction(0)
            index = i
        else:  # cji
            coeff = Fraction(sign * cm.entries[j][i])
            index = j
        if coeff:
            for w, val in rho_apply(kind_t, index, word, cm, cap).items():
                _add_term(defect, w, -coeff * val)
    return defect


def verify_ideal_kernel(cm: CartanMatrix, degree: int) -> list[FamilyReport]:
    """Check that all sixteen relation families act as zero operators.

    Every family element is a commutator combination of degree at most
    one, so vanishing on all words of length <= degree-1 is the whole
    degree-local statement; the cap itself is never exceeded.
    """
    if degree < 2:
        raise ValueError("degree must be at least 2")
    words = all_words(cm.rank, degree - 1)
    reports = []
    for name, kind_a, kind_b, target in FAMILIES:
        failures = []
        checked = 0
        for i in range(cm.rank):
            for j in range(cm.rank):
                for word in words:
                    checked += 1
                    defect = _family_defect(
                        kind_a, kind_b, target, i, j, word, cm, degree
                    )
                    if defect:
                        failures.append((i, j, word.label(), len(defect)))
        reports.append(
            FamilyReport(family=name, instances_checked=checked, failures=failures)
        )
    return reports


@dataclass
class IndependenceReport:
    rank_h: int
    rank_jh: int
    expected: int
    words_used: int

    @property
    def ok(self) -> bool:
        return self.rank_h == self.expected and self.rank_jh == self.expected


def verify_h_independence(cm: CartanMatrix, degree: int) -> IndependenceReport:
    """Rank of the diagonal-action coefficient matrices of h and Jh.

    The h generators act diagonally on words and the Jh generators act
    by the matching coefficient on the flag-swapped word; independence
    of each family is the rank of the coefficient matrix over all plain
    words, which equals the rank of the Cartan matrix.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    l = cm.rank
    plain = [w for w in all_words(l, degree) if not w.j_flag and w.length]
    rows_h: list[Vec] = []
    rows_jh: list[Vec] = []
    for word in plain:
        row_h: Vec = {}
        row_jh: Vec = {}
        for j in range(l):
            img_h = rho_apply("h", j, word, cm, degree + 1)
            coeff = img_h.get(FreeWord(False, word.indices), Fraction(0))
            if coeff:
                row_h[j] = coeff
            img_jh = rho_apply("Jh", j, word, cm, degree + 1)
            coeff = img_jh.get(FreeWord(True, word.indices), Fraction(0))
            if coeff:
                row_jh[j] = coeff
        rows_h.append(row_h)
        rows_jh.append(row_jh)
    span_h = SpanBasis(l)
    span_h.extend(rows_h)
    span_jh = SpanBasis(l)
    span_jh.extend(rows_jh)
    return IndependenceReport(
        rank_h=span_h.rank,
        rank_jh=span_jh.rank,
        expected=l,
        words_used=len(plain),
    )
