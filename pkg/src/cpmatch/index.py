"""Contextual pattern matching over a text and its reverse.

A query ``(P, ell)`` asks for one answer per distinct string ``X P Y`` with
``|X| = |Y| = ell`` occurring in the text, where contexts that overhang an
end are padded with terminators.  The index answers it in five moves:

1. locate the rank interval of the reversed pattern in the reverse text's
   suffix array;
2. split that interval into runs of suffixes agreeing on the first
   ``m + ell`` symbols, one run per distinct left context ``X``;
3. map each run onto the forward suffix array interval of suffixes starting
   with ``X P``, either by anchoring one suffix and extending it with
   threshold scans over the LCP array, or by a range minimum over a
   precomputed rank-translation array;
4. split each forward interval at depth ``m + 2*ell``, one piece per
   distinct right context ``Y``;
5. report every piece with its count and a representative occurrence.

Runs whose left context crosses the text start are singletons (the
terminator occurs at exactly one position) and are emitted directly between
steps 2 and 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .corpus import SENTINEL, Text, padded_symbol, reverse_text
from .errors import (
    BoundaryPartError,
    EmptyPatternError,
    NonSingletonBoundaryError,
    SentinelInPatternError,
)
from .rmq import QueryStats, RmqStructure, partition_interval
from .suffixes import SuffixEnsemble, build_ensemble, find_pattern_range

#: In-memory marker for the one undefined rank-translation entry.
C_UNDEFINED = 0


class MappingStrategy(Enum):
    """How step 3 translates reverse-text intervals to forward intervals."""

    PSV_NSV = "psv-nsv"
    CMIN = "cmin"


@dataclass(frozen=True)
class CpmIndex:
    """Queryable artifact: both suffix ensembles plus acceleration tables.

    ``c_array[i]`` is the forward rank of the suffix starting where the
    reverse suffix of rank ``i`` ends, ``fwd.isa[n - rev.sa[i]]``; the single
    entry with ``rev.sa[i] = n`` is undefined and stored as ``C_UNDEFINED``.
    Immutable after construction; queries never mutate it.
    """

    text: Text
    fwd: SuffixEnsemble
    rev: SuffixEnsemble
    c_array: list[int]
    rmq_fwd: RmqStructure
    rmq_rev: RmqStructure
    rmq_c: RmqStructure


@dataclass(frozen=True)
class ContextMatch:
    """One distinct padded context, as a rank range plus bookkeeping.

    ``ds..de`` is a forward suffix array interval; for interior contexts its
    suffixes start at the context (``p_offset == ell``), for contexts whose
    left side crosses the text start it is the singleton rank of the suffix
    starting at the pattern occurrence itself (``p_offset == 0``).
    """

    context: tuple[int, ...]
    ds: int
    de: int
    count: int
    rep_position: int
    p_offset: int


@dataclass
class QueryTrace:
    """Optional capture of intermediate query state, for inspection."""

    rev_range: tuple[int, int] | None = None
    part_starts: list[int] = field(default_factory=list)
    mapped_ranges: list[tuple[int, int]] = field(default_factory=list)


def build_index(t: Text) -> CpmIndex:
    """Build both ensembles, the rank-translation array, and rmq tables."""
    fwd = build_ensemble(t)
    rev = build_ensemble(reverse_text(t))
    n = t.n
    c_array = [C_UNDEFINED] * (n + 1)
    for i in range(1, n + 1):
        start = rev.sa[i]
        if start != n:
            c_array[i] = fwd.isa[n - start]
    return assemble_index(t, fwd, rev, c_array)


def assemble_index(
    t: Text,
    fwd: SuffixEnsemble,
    rev: SuffixEnsemble,
    c_array: list[int],
) -> CpmIndex:
    """Attach fresh acceleration tables to already-built base arrays."""
    return CpmIndex(
        text=t,
        fwd=fwd,
        rev=rev,
        c_array=c_array,
        rmq_fwd=RmqStructure(fwd.lcp),
        rmq_rev=RmqStructure(rev.lcp),
        rmq_c=RmqStructure(c_array),
    )


def _context_start(ix: CpmIndex, rev_rank: int, m: int, ell: int,
                   stats: QueryStats | None) -> int:
    """Text position where the left context of this run would begin.

    Zero or negative means the context crosses the left text end.
    """
    if stats is not None:
        stats.sa_accesses += 1
    return ix.text.n - ix.rev.sa[rev_rank] - (m + ell - 1)


def map_via_psv_nsv(
    ix: CpmIndex,
    part: tuple[int, int],
    m: int,
    ell: int,
    stats: QueryStats | None = None,
) -> tuple[int, int]:
    """Map a step-2 run to its forward interval by anchor and extension.

    Anchors the forward suffix starting at the run's left context, then
    widens to every suffix sharing its first ``m + ell`` symbols using
    threshold scans over the forward LCP array.
    """
    t = m + ell
    j = _context_start(ix, part[0], m, ell, stats)
    if j <= 0:
        raise BoundaryPartError("run crosses the left text end")
    if stats is not None:
        stats.sa_accesses += 1
    p = ix.fwd.isa[j]
    ds = p if ix.fwd.lcp[p] < t else ix.rmq_fwd.psv(p, t, stats)
    de = ix.rmq_fwd.nsv(p, t, stats) - 1
    return ds, de


def map_via_cmin(
    ix: CpmIndex,
    part: tuple[int, int],
    m: int,
    ell: int,
    stats: QueryStats | None = None,
) -> tuple[int, int]:
    """Map a step-2 run to its forward interval via the translation array.

    The run element minimizing ``c_array`` owns the lexicographically
    smallest forward suffix of the interval, so one range minimum plus one
    inverse lookup yields the start; the size carries over unchanged.
    """
    if _context_start(ix, part[0], m, ell, stats) <= 0:
        raise BoundaryPartError("run crosses the left text end")
    i_min = ix.rmq_c.rmq(part[0], part[1], stats)
    if stats is not None:
        stats.sa_accesses += 2
    j = ix.text.n - ix.rev.sa[i_min] - (m + ell - 1)
    ds = ix.fwd.isa[j]
    return ds, ds + (part[1] - part[0])


def emit_boundary_context(
    ix: CpmIndex,
    part: tuple[int, int],
    m: int,
    ell: int,
    stats: QueryStats | None = None,
) -> ContextMatch:
    """Emit the single match for a run whose left context crosses the start.

    Such a run is necessarily a singleton, and its answer is the rank of
    the suffix beginning at the pattern occurrence itself.
    """
    if part[0] != part[1]:
        raise NonSingletonBoundaryError(
            f"boundary run [{part[0]}..{part[1]}] holds more than one suffix"
        )
    if stats is not None:
        stats.sa_accesses += 2
    pos = ix.text.n - ix.rev.sa[part[0]] - m + 1
    rank = ix.fwd.isa[pos]
    return ContextMatch(
        context=extract_context(ix, pos, m, ell),
        ds=rank,
        de=rank,
        count=1,
        rep_position=pos,
        p_offset=0,
    )


def query(
    ix: CpmIndex,
    pattern,
    ell: int,
    strategy: MappingStrategy = MappingStrategy.PSV_NSV,
    stats: QueryStats | None = None,
    trace: QueryTrace | None = None,
) -> list[ContextMatch]:
    """All distinct padded contexts of ``pattern`` with context length ``ell``.

    Both strategies return identical results; ``trace``, when given, records
    the reverse rank interval, the step-2 part starts, and the mapped
    forward ranges.
    """
    p = list(pattern)
    if not p:
        raise EmptyPatternError("pattern must be nonempty")
    if SENTINEL in p:
        raise SentinelInPatternError("pattern contains the terminator symbol")
    if ell < 0:
        raise ValueError("context length must be >= 0")
    if stats is None:
        stats = QueryStats()
    m = len(p)
    mapper = map_via_cmin if strategy is MappingStrategy.CMIN else map_via_psv_nsv

    rev_range = find_pattern_range(ix.rev, p[::-1], stats)
    if trace is not None:
        trace.rev_range = rev_range
    if rev_range is None:
        return []

    parts = partition_interval(ix.rmq_rev, rev_range[0], rev_range[1], m + ell, stats)
    if trace is not None:
        trace.part_starts = [s for s, _ in parts]

    out: list[ContextMatch] = []
    for part in parts:
        if _context_start(ix, part[0], m, ell, stats) <= 0:
            match = emit_boundary_context(ix, part, m, ell, stats)
            if trace is not None:
                trace.mapped_ranges.append((match.ds, match.de))
            out.append(match)
            continue
        ds, de = mapper(ix, part, m, ell, stats)
        if trace is not None:
            trace.mapped_ranges.append((ds, de))
        for sub_lo, sub_hi in partition_interval(ix.rmq_fwd, ds, de, m + 2 * ell, stats):
            stats.sa_accesses += 1
            pos = ix.fwd.sa[sub_lo] + ell
            out.append(
                ContextMatch(
                    context=extract_context(ix, pos, m, ell),
                    ds=sub_lo,
                    de=sub_hi,
                    count=sub_hi - sub_lo + 1,
                    rep_position=pos,
                    p_offset=ell,
                )
            )
    return out


def enumerate_occurrences(ix: CpmIndex, match: ContextMatch) -> list[int]:
    """Start positions of every occurrence behind one match, in rank order."""
    return [ix.fwd.sa[r] + match.p_offset for r in range(match.ds, match.de + 1)]


def extract_context(ix: CpmIndex, pos: int, m: int, ell: int) -> tuple[int, ...]:
    """The ``m + 2*ell`` padded symbols around an occurrence at ``pos``."""
    t = ix.text
    return tuple(padded_symbol(t, j) for j in range(pos - ell, pos + m + ell))
