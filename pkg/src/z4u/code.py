"""Linear codes over Z4+uZ4: enumeration, duals, self-duality, min distance.

A linear code is the row span of a generator matrix G (a k x n uint8 array
of packed ring elements).  The ring is not a chain ring, so there is no
standard generating form in general; cardinality is 16^k only when G is
literally [I_k | A], and must otherwise be established by deduplicated
enumeration.

Enumeration kernels are table-driven numpy.  Messages x in R^k run in
odometer order (last coordinate fastest), and the minimum-distance kernel
splits the message space into a precomputed low block and an outer loop
over high digits, so each step is one fancy-indexed gather plus a row sum
over a (16^klo, n-k) array.  Work shards by the first message coordinate
(16 fixed shards); shard results merge by an order-free minimum, so thread
count never changes any reported value or witness.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

import numpy as np

from . import ring
from .errors import BudgetExceeded, ZeroCode

#: Default enumeration budget (message count); the slow lane raises it 16x.
DEFAULT_BUDGET = 16 ** 7
SLOW_BUDGET = 16 ** 8

#: Seed for sampled upper-bound messages; fixed so reports are replayable.
SAMPLE_SEED = 0x5EED
DEFAULT_SAMPLE_COUNT = 50_000

_LO_DIGITS = 5          # low-block width: 16^5 rows per gather
_BIG = 1 << 30


def as_matrix(rows: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    """Validate and return a k x n uint8 matrix of ring element values."""
    m = np.asarray(rows, dtype=np.uint8)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"generator matrix must be 2-D and nonempty, got shape {m.shape}")
    if m.max(initial=0) > 15:
        raise ValueError("matrix entries must be packed ring values 0..15")
    return m


def identity(k: int) -> np.ndarray:
    m = np.full((k, k), ring.ZERO, dtype=np.uint8)
    np.fill_diagonal(m, ring.ONE)
    return m


def transpose_neg(a: np.ndarray) -> np.ndarray:
    """-A^T, entrywise ring negation."""
    return ring.NEG[a.T]


def ring_matmul(x: np.ndarray, g: np.ndarray) -> np.ndarray:
    """(B, k) x (k, n) -> (B, n) product over the ring, via lookup tables."""
    b, k = x.shape
    n = g.shape[1]
    acc = np.full((b, n), ring.ZERO, dtype=np.uint8)
    for i in range(k):
        acc = ring.ADD[acc, ring.MUL[x[:, i]][:, g[i]]]
    return acc


def inner(x: Sequence[int], y: Sequence[int]) -> int:
    """Euclidean inner product sum(x_i * y_i) in the ring."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    acc = ring.ZERO
    for a, b in zip(x, y):
        acc = ring.add(acc, ring.mul(int(a), int(b)))
    return acc


def lee_weight_vector(v: Sequence[int]) -> int:
    return int(ring.LEE[np.asarray(v, dtype=np.uint8)].sum())


# ---------------------------------------------------------------------------
# Message enumeration
# ---------------------------------------------------------------------------

def _digits_block(start: int, stop: int, k: int, base_bits: int = 4) -> np.ndarray:
    """Messages start..stop-1 as (stop-start, k) digit arrays, odometer order."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, k), dtype=np.uint8)
    mask = (1 << base_bits) - 1
    for j in range(k):
        out[:, k - 1 - j] = (idx >> (base_bits * j)) & mask
    return out


def message_blocks(k: int, block: int = 16 ** _LO_DIGITS) -> Iterator[np.ndarray]:
    total = 16 ** k
    for start in range(0, total, block):
        yield _digits_block(start, min(start + block, total), k)


def low_weight_messages(k: int, max_hamming: int = 2) -> np.ndarray:
    """All messages of Hamming weight 1..max_hamming over R^k, fixed order."""
    rows: list[np.ndarray] = []
    nz = np.arange(1, 16, dtype=np.uint8)
    for i in range(k):
        m = np.zeros((15, k), dtype=np.uint8)
        m[:, i] = nz
        rows.append(m)
    if max_hamming >= 2:
        pair = np.array([(v1, v2) for v1 in range(1, 16) for v2 in range(1, 16)],
                        dtype=np.uint8)
        for i in range(k):
            for j in range(i + 1, k):
                m = np.zeros((225, k), dtype=np.uint8)
                m[:, i] = pair[:, 0]
                m[:, j] = pair[:, 1]
                rows.append(m)
    return np.concatenate(rows, axis=0) if rows else np.zeros((0, k), dtype=np.uint8)


def sampled_messages(k: int, count: int, seed: int = SAMPLE_SEED) -> Iterator[np.ndarray]:
    rng = np.random.default_rng(seed)
    done = 0
    while done < count:
        b = min(1 << 16, count - done)
        x = rng.integers(0, 16, size=(b, k), dtype=np.uint8)
        yield x[(x != 0).any(axis=1)]
        done += b


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------

class SelfDuality(Enum):
    SELF_DUAL = "self-dual"
    SELF_ORTHOGONAL_ONLY = "self-orthogonal"
    NEITHER = "neither"


@dataclass(frozen=True)
class DistanceResult:
    """Minimum Lee distance, with an honest exact/upper-bound flag."""

    value: int
    exact: bool
    witness_message: tuple[int, ...]

    def label(self) -> str:
        return "exact" if self.exact else "upper-bound"


@dataclass(frozen=True)
class CodewordSet:
    """Explicit deduplicated codeword collection (small codes only)."""

    words: frozenset[tuple[int, ...]]
    length: int

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, v) -> bool:
        return tuple(int(x) for x in v) in self.words

    def sorted_words(self) -> list[tuple[int, ...]]:
        return sorted(self.words)

    def is_linear(self) -> bool:
        """Closure under addition and all 16 scalar actions (exhaustive)."""
        ws = self.words
        for w in ws:
            for s in ring.ELEMENTS:
                if tuple(ring.mul(s, x) for x in w) not in ws:
                    return False
        for w1 in ws:
            for w2 in ws:
                if tuple(ring.add(a, b) for a, b in zip(w1, w2)) not in ws:
                    return False
        return True


# ---------------------------------------------------------------------------
# The code object
# ---------------------------------------------------------------------------

class LinearCode:
    """Row span of a generator matrix over Z4+uZ4."""

    def __init__(self, gen: Sequence[Sequence[int]] | np.ndarray):
        self.gen = as_matrix(gen)
        self.gen.flags.writeable = False
        self._cardinality: int | None = None
        self._words: CodewordSet | None = None

    @classmethod
    def from_text(cls, text: str) -> "LinearCode":
        return cls(ring.parse_matrix_text(text))

    @classmethod
    def from_file(cls, path) -> "LinearCode":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def standard_form(self) -> bool:
        k = self.k
        return self.n >= k and bool(np.array_equal(self.gen[:, :k], identity(k)))

    @property
    def is_zero(self) -> bool:
        return not self.gen.any()

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        x = np.asarray(message, dtype=np.uint8).reshape(1, -1)
        if x.shape[1] != self.k:
            raise ValueError(f"message length {x.shape[1]} != k = {self.k}")
        return tuple(int(v) for v in ring_matmul(x, self.gen)[0])

    # -- enumeration ------------------------------------------------------

    def codeword_set(self, budget: int = DEFAULT_BUDGET) -> CodewordSet:
        """Deduplicated codeword set; costs a 16^k message sweep."""
        if self._words is not None:
            return self._words
        total = 16 ** self.k
        if total > budget:
            raise BudgetExceeded(total, budget, "codeword enumeration")
        if total > 16 ** 6:
            raise BudgetExceeded(total, 16 ** 6, "deduplicated codeword storage")
        parts = [np.unique(ring_matmul(blk, self.gen), axis=0)
                 for blk in message_blocks(self.k)]
        dedup = np.unique(np.concatenate(parts, axis=0), axis=0)
        words = frozenset(tuple(w) for w in dedup.tolist())
        self._words = CodewordSet(words, self.n)
        self._cardinality = len(words)
        return self._words

    def iter_codewords(self, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, ...]]:
        """Every codeword exactly once.

        Standard form streams 16^k messages in odometer order; otherwise the
        deduplicated set is materialized first and streamed sorted.
        """
        total = 16 ** self.k
        if self.standard_form:
            if total > budget:
                raise BudgetExceeded(total, budget, "codeword enumeration")
            self._cardinality = total
            for blk in message_blocks(self.k):
                for row in ring_matmul(blk, self.gen):
                    yield tuple(int(v) for v in row)
        else:
            yield from self.codeword_set(budget).sorted_words()

    def cardinality(self, budget: int = DEFAULT_BUDGET) -> int:
        """Exact |C|: 16^k in standard form, else by deduplication."""
        if self._cardinality is None:
            if self.standard_form:
                self._cardinality = 16 ** self.k
            else:
                self.codeword_set(budget)
        assert self._cardinality is not None
        return self._cardinality

    # -- duality ----------------------------------------------------------

    def is_self_orthogonal(self) -> bool:
        """C subseteq C-perp, via pairwise generator-row inner products."""
        g = self.gen
        for i in range(self.k):
            for j in range(i, self.k):
                if inner(g[i], g[j]) != ring.ZERO:
                    return False
        return True

    def dual_bruteforce(self, budget: int = DEFAULT_BUDGET) -> CodewordSet:
        """All vectors orthogonal to every generator row (16^n sweep)."""
        total = 16 ** self.n
        if total > budget:
            raise BudgetExceeded(total, budget, "dual enumeration")
        kept: list[np.ndarray] = []
        for blk in message_blocks(self.n):
            ok = np.ones(blk.shape[0], dtype=bool)
            for row in self.gen:
                ip = np.full(blk.shape[0], ring.ZERO, dtype=np.uint8)
                for j in range(self.n):
                    ip = ring.ADD[ip, ring.MUL[:, row[j]][blk[:, j]]]
                ok &= ip == ring.ZERO
            kept.append(blk[ok])
        words = frozenset(tuple(int(v) for v in w) for w in np.concatenate(kept, axis=0))
        return CodewordSet(words, self.n)

    def self_duality(self, budget: int = DEFAULT_BUDGET) -> SelfDuality:
        if not self.is_self_orthogonal():
            return SelfDuality.NEITHER
        size = self.cardinality(budget)
        return SelfDuality.SELF_DUAL if size * size == 16 ** self.n \
            else SelfDuality.SELF_ORTHOGONAL_ONLY

    # -- minimum distance --------------------------------------------------

    def min_lee_distance(self, budget: int = DEFAULT_BUDGET,
                         sample_count: int = DEFAULT_SAMPLE_COUNT,
                         threads: int = 1) -> DistanceResult:
        """Minimum Lee weight of a nonzero codeword.

        Exact when 16^k fits the budget, otherwise an upper bound from all
        Hamming-weight-<=2 messages plus `sample_count` seeded random
        messages.
        """
        if self.is_zero:
            raise ZeroCode("minimum distance of the zero code is undefined")
        best = _low_weight_scan(self.gen, self.standard_form)
        if 16 ** self.k <= budget:
            exact = _exact_min_distance(self.gen, self.standard_form, best, threads)
            return DistanceResult(exact[0], True, exact[1])
        for blk in sampled_messages(self.k, sample_count):
            cand = _best_in_block(self.gen, blk, self.standard_form)
            if cand is not None and cand[0] < best[0]:
                best = cand
        return DistanceResult(best[0], False, best[1])

    # -- weight census -------------------------------------------------------

    def lee_census(self, budget: int = DEFAULT_BUDGET, threads: int = 1) -> np.ndarray:
        """Counts of codewords per Lee weight 0..4n (each codeword once)."""
        if self.standard_form:
            total = 16 ** self.k
            if total > budget:
                raise BudgetExceeded(total, budget, "weight census")
            self._cardinality = total
            return _census_standard(self.gen, threads)
        hist = np.zeros(4 * self.n + 1, dtype=np.int64)
        for w in self.codeword_set(budget).words:
            hist[lee_weight_vector(w)] += 1
        return hist

    def __repr__(self) -> str:
        return f"LinearCode(k={self.k}, n={self.n}, standard_form={self.standard_form})"


def best_weight_in_messages(code: LinearCode, messages: np.ndarray) -> _Best | None:
    """Min (nonzero codeword weight, witness message) over explicit messages."""
    return _best_in_block(code.gen, np.asarray(messages, dtype=np.uint8),
                          code.standard_form)


def dual_of_standard_form(code: LinearCode) -> LinearCode:
    """For C = <[I_n | A]>, the dual is generated by [-A^T | I_n]."""
    k, n = code.k, code.n
    if not code.standard_form or n != 2 * k:
        raise ValueError("dual_of_standard_form needs a [I_k | A] generator with n = 2k")
    a = code.gen[:, k:]
    return LinearCode(np.hstack([transpose_neg(a), identity(k)]))


# ---------------------------------------------------------------------------
# Distance kernel
# ---------------------------------------------------------------------------

_Best = tuple[int, tuple[int, ...]]  # (weight, witness message)


def _block_weights(gen: np.ndarray, blk: np.ndarray, standard: bool) -> np.ndarray:
    if standard:
        k = gen.shape[0]
        tails = ring_matmul(blk, gen[:, k:]) if gen.shape[1] > k else \
            np.zeros((blk.shape[0], 0), dtype=np.uint8)
        return ring.LEE[blk].sum(axis=1, dtype=np.int64) + \
            ring.LEE[tails].sum(axis=1, dtype=np.int64)
    words = ring_matmul(blk, gen)
    return ring.LEE[words].sum(axis=1, dtype=np.int64)


def _best_in_block(gen, blk, standard) -> _Best | None:
    """Min (weight, first witness) over a block, zero codewords excluded."""
    if blk.shape[0] == 0:
        return None
    w = _block_weights(gen, blk, standard)
    w[w == 0] = _BIG
    i = int(w.argmin())
    if w[i] >= _BIG:
        return None
    return int(w[i]), tuple(int(v) for v in blk[i])


def _low_weight_scan(gen, standard) -> _Best:
    best = _best_in_block(gen, low_weight_messages(gen.shape[0]), standard)
    if best is None:
        # every Hamming-weight-<=2 codeword is zero; fall back to max bound
        return 4 * gen.shape[1] + 1, ()
    return best


def _exact_min_distance(gen: np.ndarray, standard: bool, seed: _Best,
                        threads: int = 1) -> _Best:
    """Full 16^k sweep; two-level gather kernel with info-weight pruning."""
    k = gen.shape[0]
    if k <= _LO_DIGITS:
        best = seed
        for blk in message_blocks(k):
            cand = _best_in_block(gen, blk, standard)
            if cand is not None and cand[0] < best[0]:
                best = cand
        return best
    shards = [(s, seed) for s in range(16)]
    if threads > 1:
        with multiprocessing.get_context("fork").Pool(threads) as pool:
            results = pool.starmap(_DistShard(gen, standard), shards)
    else:
        results = [_DistShard(gen, standard)(s, b) for s, b in shards]
    return min(results, key=lambda r: (r[0], r[1]))


class _DistShard:
    """Picklable shard worker: messages whose first coordinate is fixed."""

    def __init__(self, gen: np.ndarray, standard: bool):
        self.gen = gen
        self.standard = standard

    def __call__(self, shard: int, seed: _Best) -> _Best:
        gen, standard = self.gen, self.standard
        k, n = gen.shape
        klo = _LO_DIGITS
        khi = k - klo
        if standard:
            m_tail = gen[:, k:]
            lo_rows, hi_rows = m_tail[khi:], m_tail[:khi]
            m = n - k
        else:
            lo_rows, hi_rows = gen[khi:], gen[:khi]
            m = n
        nlo = 16 ** klo
        low = _digits_block(0, nlo, klo)
        wlo = ring.LEE[low].sum(axis=1, dtype=np.int64) if standard else 0
        tl = ring_matmul(low, lo_rows)
        idx = tl.astype(np.int32) * m + np.arange(m, dtype=np.int32)[None, :]

        per_shard = 16 ** (khi - 1)
        his = _digits_block(shard * per_shard, (shard + 1) * per_shard, khi)
        whis = ring.LEE[his].sum(axis=1, dtype=np.int64)
        order = np.argsort(whis, kind="stable") if standard else np.arange(len(whis))

        best_w, best_msg = seed
        for hi_i in order:
            whi = int(whis[hi_i])
            if standard and whi >= best_w:
                break
            tail_hi = ring_matmul(his[hi_i:hi_i + 1], hi_rows)[0]
            lflat = ring.LEE[ring.ADD[:, tail_hi]].ravel()
            w = lflat[idx].sum(axis=1, dtype=np.int64)
            if standard:
                w += wlo + whi
                if whi == 0:
                    w[0] = _BIG  # the all-zero message
            else:
                w[w == 0] = _BIG  # any message mapping to the zero word
            i = int(w.argmin())
            if w[i] < best_w:
                best_w = int(w[i])
                best_msg = tuple(int(v) for v in his[hi_i]) + tuple(int(v) for v in low[i])
        return best_w, best_msg


def _census_standard(gen: np.ndarray, threads: int = 1) -> np.ndarray:
    k, n = gen.shape
    nbins = 4 * n + 1
    if k <= _LO_DIGITS:
        hist = np.zeros(nbins, dtype=np.int64)
        for blk in message_blocks(k):
            hist += np.bincount(_block_weights(gen, blk, True), minlength=nbins)
        return hist
    shards = list(range(16))
    if threads > 1:
        with multiprocessing.get_context("fork").Pool(threads) as pool:
            parts = pool.map(_CensusShard(gen), shards)
    else:
        parts = [_CensusShard(gen)(s) for s in shards]
    return np.sum(parts, axis=0)


class _CensusShard:
    def __init__(self, gen: np.ndarray):
        self.gen = gen

    def __call__(self, shard: int) -> np.ndarray:
        gen = self.gen
        k, n = gen.shape
        klo = _LO_DIGITS
        khi = k - klo
        m_tail = gen[:, k:]
        lo_rows, hi_rows = m_tail[khi:], m_tail[:khi]
        m = n - k
        nlo = 16 ** klo
        low = _digits_block(0, nlo, klo)
        wlo = ring.LEE[low].sum(axis=1, dtype=np.int64)
        tl = ring_matmul(low, lo_rows)
        idx = tl.astype(np.int32) * m + np.arange(m, dtype=np.int32)[None, :]
        nbins = 4 * n + 1
        hist = np.zeros(nbins, dtype=np.int64)
        per_shard = 16 ** (khi - 1)
        his = _digits_block(shard * per_shard, (shard + 1) * per_shard, khi)
        whis = ring.LEE[his].sum(axis=1, dtype=np.int64)
        for hi_i in range(his.shape[0]):
            tail_hi = ring_matmul(his[hi_i:hi_i + 1], hi_rows)[0]
            lflat = ring.LEE[ring.ADD[:, tail_hi]].ravel()
            w = lflat[idx].sum(axis=1, dtype=np.int64) + wlo + int(whis[hi_i])
            hist += np.bincount(w, minlength=nbins)
        return hist
