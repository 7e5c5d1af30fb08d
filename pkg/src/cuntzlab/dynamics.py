"""Induced Cantor-set dynamics of a diagonal-preserving endomorphism.

The standard masa of O_N is generated by the cylinder projections
s_w s_w^*; a diagonal-preserving endomorphism of rank k induces a
continuous map T on one-sided infinite words whose first p output letters
depend only on the first p + k - 1 input letters.  The finite data is a
BlockMapTable; topological entropy is computed from exact join counts of
the depth-p cylinder partition under T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import AlgebraElement, Word, words
from .endomorphism import EndomorphismSpec
from .errors import (BudgetExceededError, DiagonalNotPreservedError,
                     PartitionError)

DEFAULT_BUDGET = 2 ** 22


def pack_word(word: Word, n_gens: int) -> int:
    """Base-N code of a word, first letter most significant, digits 0-based."""
    code = 0
    for letter in word:
        code = code * n_gens + (letter - 1)
    return code


def unpack_word(code: int, length: int, n_gens: int) -> Word:
    letters = []
    for _ in range(length):
        letters.append(code % n_gens + 1)
        code //= n_gens
    return tuple(reversed(letters))


@dataclass(frozen=True)
class BlockMapTable:
    """Total map from length-`window` input words to length-`p` output
    words, stored as a packed integer table in lexicographic order."""

    n_gens: int
    p: int
    window: int
    table: np.ndarray  # shape (N^window,), values in [0, N^p)

    def __post_init__(self):
        if self.p <= 0:
            raise ValueError("output depth p must be positive")
        if len(self.table) != self.n_gens ** self.window:
            raise ValueError("table length does not match window")

    def map_word(self, word: Word) -> Word:
        if len(word) != self.window:
            raise ValueError(f"expected a word of length {self.window}")
        code = int(self.table[pack_word(word, self.n_gens)])
        return unpack_word(code, self.p, self.n_gens)

    def partition_ok(self) -> bool:
        """Preimages of distinct outputs are disjoint and exhaust the input
        words; with a total table this reduces to the value range check."""
        return bool((self.table >= 0).all()
                    and (self.table < self.n_gens ** self.p).all())

    def restrict(self, p: int) -> "BlockMapTable":
        """Truncate outputs to depth p <= self.p and shrink the window by
        the same amount."""
        if not 1 <= p <= self.p:
            raise ValueError("restriction depth out of range")
        drop = self.p - p
        n = self.n_gens
        stride = n ** drop
        sub = self.table[::stride] // stride
        return BlockMapTable(n, p, self.window - drop, sub.copy())


@dataclass
class EntropyReport:
    """Join-count series N(n, p) with exact integer counts and a verdict."""

    perm: str
    masa: str
    p: int
    counts: List[Tuple[int, int]]
    increments: List[object]  # Fraction bits when exact powers of two, else float
    verdict: str  # "log2" | "zero" | "inconclusive"
    estimate_nats: float

    def to_dict(self) -> dict:
        return {
            "perm": self.perm,
            "masa": self.masa,
            "p": self.p,
            "counts": [[n, str(c)] for n, c in self.counts],
            "increments": [
                float(x) if isinstance(x, float) else str(x) for x in self.increments
            ],
            "verdict": self.verdict,
            "estimate_nats": self.estimate_nats,
        }


def _verdict(counts: Sequence[Tuple[int, int]]):
    """Exact verdict: log2 if the last four ratios are exactly 2, zero if
    the last four counts are equal, else inconclusive with an LSQ slope."""
    values = [c for _, c in counts]
    increments: List[object] = []
    for prev, cur in zip(values, values[1:]):
        if cur % prev == 0 and (q := cur // prev) & (q - 1) == 0:
            increments.append(Fraction(q.bit_length() - 1))
        else:
            increments.append(math.log2(cur / prev))
    tail = increments[-4:]
    if len(tail) == 4 and all(x == 1 for x in tail):
        return increments, "log2", math.log(2.0)
    if len(values) >= 4 and len(set(values[-4:])) == 1:
        return increments, "zero", 0.0
    ns = np.array([n for n, _ in counts], dtype=float)
    logs = np.array([math.log(c) for c in values])
    slope = float(np.polyfit(ns, logs, 1)[0]) if len(ns) >= 2 else 0.0
    return increments, "inconclusive", slope


class JoinDynamics:
    """Shared join-count / entropy machinery over block-map tables.

    Subclasses provide `block_map(p)` plus the window-growth step (window
    at depth p is p + step) and a report label."""

    n_gens: int
    step: int
    budget: int

    def __init__(self, n_gens: int, step: int, budget: int = DEFAULT_BUDGET):
        self.n_gens = n_gens
        self.step = step
        self.budget = budget
        self._tables: Dict[int, BlockMapTable] = {}

    def label(self) -> str:
        return "?"

    def masa_name(self) -> str:
        return "standard"

    def block_map(self, p: int) -> BlockMapTable:
        if p <= 0:
            raise ValueError("depth p must be positive")
        if p not in self._tables:
            self._tables[p] = self._build_table(p)
        return self._tables[p]

    def _build_table(self, p: int) -> BlockMapTable:
        raise NotImplementedError

    def _check_budget(self, length: int) -> None:
        if self.n_gens ** length > self.budget:
            raise BudgetExceededError(
                f"word length {length} needs {self.n_gens ** length} words, "
                f"budget {self.budget}")

    def _full_image_table(self, length: int) -> np.ndarray:
        """Packed map from length-`length` words to their full image of
        length `length - step`."""
        return self.block_map(length - self.step).table

    # -- join counting ------------------------------------------------------

    def join_count(self, p: int, n_steps: int) -> int:
        """N(n, p): number of distinct itineraries (w|_p, (Tw)|_p, ...,
        (T^{n-1}w)|_p), exact."""
        return self._join_counts(p, n_steps)[-1][1]

    def _join_counts(self, p: int, n_max: int) -> List[Tuple[int, int]]:
        """Incremental itinerary-class refinement: the class of w after n
        steps is the pair (w|_p, class of Tw after n-1 steps)."""
        n = self.n_gens
        self._check_budget(p + (n_max - 1) * self.step)
        counts: List[Tuple[int, int]] = [(1, n ** p)]
        cls = np.arange(n ** p, dtype=np.int64)
        n_classes = n ** p
        for steps in range(2, n_max + 1):
            length = p + (steps - 1) * self.step
            img_cls = cls[self._full_image_table(length)]
            prefix = np.arange(n ** length, dtype=np.int64) // (n ** (length - p))
            keys = prefix * n_classes + img_cls
            _, cls = np.unique(keys, return_inverse=True)
            n_classes = int(cls.max()) + 1
            counts.append((steps, n_classes))
        return counts

    def entropy(self, p_max: int = 4, n_max: int = 16) -> List[EntropyReport]:
        """One EntropyReport per depth p = 1..p_max."""
        reports = []
        for p in range(1, p_max + 1):
            counts = self._join_counts(p, n_max)
            increments, verdict, est = _verdict(counts)
            reports.append(EntropyReport(self.label(), self.masa_name(), p,
                                         counts, increments, verdict, est))
        return reports

    @staticmethod
    def summarize(reports: Sequence[EntropyReport]) -> EntropyReport:
        """Supremum over depths: log2 dominates, then inconclusive, then zero."""
        rank = {"zero": 0, "inconclusive": 1, "log2": 2}
        return max(reports, key=lambda r: (rank[r.verdict], r.estimate_nats))

    # -- separation certificate --------------------------------------------

    def separation_check(self, depth: int) -> bool:
        """Certificate for h_top(T) >= log 2: whenever two inputs share
        their first j letters but differ at letter j+1, their depth-j
        outputs differ (for every j <= depth).  Equivalently, on each
        fixed-prefix fiber the output determines the (j+1)-th input letter."""
        n = self.n_gens
        for j in range(1, depth + 1):
            tbl = self.block_map(j)
            length = tbl.window
            if length < j + 1:
                return False
            codes = np.arange(n ** length, dtype=np.int64)
            prefix = codes // (n ** (length - j))
            midletter = (codes // (n ** (length - j - 1))) % n
            pairs = prefix * (n ** j) + tbl.table
            triples = pairs * n + midletter
            if len(np.unique(triples)) != len(np.unique(pairs)):
                return False
        return True


class CantorDynamics(JoinDynamics):
    """Block maps and entropy for one endomorphism on the standard masa."""

    def __init__(self, endo: EndomorphismSpec, budget: int = DEFAULT_BUDGET):
        super().__init__(endo.n_gens, max(endo.rank - 1, 0), budget)
        self.endo = endo
        self._perm_inverse: Optional[np.ndarray] = None
        if endo.perm is not None:
            inv = endo.perm.inverse()
            self._perm_inverse = np.array(
                [pack_word(inv(w), self.n_gens) for w in words(self.n_gens, endo.rank)],
                dtype=np.int64,
            )

    def label(self) -> str:
        return self.endo.label()

    def diagonal_invariant(self, depth: int) -> bool:
        """Every cylinder projection of depth <= `depth` maps to an exact
        0/1 sum of cylinder projections."""
        n = self.n_gens
        for length in range(1, depth + 1):
            for v in words(n, length):
                img = self.endo.apply(AlgebraElement.diagonal(n, v))
                if any(d != 0 for d in img.degrees()):
                    return False
                lev = img.level({0: img.max_right_length(0)})
                if not lev.is_diagonal_01():
                    return False
        return True

    def _build_table(self, p: int) -> BlockMapTable:
        if self._perm_inverse is not None:
            return self._permutative_table(p)
        return self._symbolic_table(p)

    def _permutative_table(self, p: int) -> BlockMapTable:
        """Vectorized construction for rho_sigma.  The first output letter
        on a window w is the first letter of sigma^{-1}(w|_k); the residual
        word (rest of the preimage followed by the unread input) feeds the
        next step."""
        n = self.n_gens
        k = self.endo.rank
        window = p + k - 1
        self._check_budget(window)
        sinv = self._perm_inverse
        cur = np.arange(n ** window, dtype=np.int64)
        out = np.zeros(n ** window, dtype=np.int64)
        length = window
        for _ in range(p):
            tail = n ** (length - k)
            head = cur // tail
            pre = sinv[head]
            out = out * n + pre // (n ** (k - 1))
            cur = (pre % (n ** (k - 1))) * tail + cur % tail
            length -= 1
        return BlockMapTable(n, p, window, out)

    def _symbolic_table(self, p: int) -> BlockMapTable:
        """Generic construction from rho applied to cylinder projections."""
        n = self.n_gens
        window = p + self.step
        self._check_budget(window)
        table = np.full(n ** window, -1, dtype=np.int64)
        for v in words(n, p):
            img = self.endo.apply(AlgebraElement.diagonal(n, v))
            if any(d != 0 for d in img.degrees()):
                raise DiagonalNotPreservedError(
                    f"image of cylinder {v} has unbalanced terms")
            lev = img.level({0: window})
            if not lev.is_diagonal_01():
                raise DiagonalNotPreservedError(
                    f"image of cylinder {v} is not a 0/1 diagonal sum")
            code_v = pack_word(v, n)
            for mono in lev.terms:
                w = pack_word(mono.left, n)
                if table[w] != -1:
                    raise PartitionError(
                        f"input word {mono.left} claimed by two outputs")
                table[w] = code_v
        if (table == -1).any():
            raise PartitionError("block map is not total: uncovered input words")
        return BlockMapTable(n, p, window, table)
