import random

import pytest

from cpmatch.corpus import load_text
from cpmatch.errors import (
    BoundaryPartError,
    EmptyPatternError,
    NonSingletonBoundaryError,
    SentinelInPatternError,
)
from cpmatch.index import (
    C_UNDEFINED,
    MappingStrategy,
    QueryTrace,
    build_index,
    emit_boundary_context,
    enumerate_occurrences,
    extract_context,
    map_via_cmin,
    map_via_psv_nsv,
    query,
)
from cpmatch.rmq import QueryStats

import alabar_data
import naive

A = [alabar_data.CODE["a"]]


def test_alabar_c_array(alabar_index):
    assert alabar_index.c_array[1] == C_UNDEFINED
    assert alabar_index.c_array == alabar_data.C_MAP


def test_minimal_index():
    ix = build_index(load_text(b"a"))
    assert ix.text.n == 2
    assert ix.fwd.sa == [0, 2, 1]


def test_c_array_matches_definition_on_random_texts():
    rng = random.Random(3)
    for _ in range(20):
        t = load_text(naive.random_raw(rng, rng.randint(1, 120), 4))
        ix = build_index(t)
        for i in range(1, t.n + 1):
            if ix.rev.sa[i] == t.n:
                assert ix.c_array[i] == C_UNDEFINED
            else:
                assert ix.c_array[i] == ix.fwd.isa[t.n - ix.rev.sa[i]]


def expected_a_ell1():
    return [
        (alabar_data.ctx(c), ds, de, count, rep)
        for c, ds, de, count, rep in alabar_data.A_ELL1_MATCHES
    ]


@pytest.mark.parametrize("strategy", list(MappingStrategy))
def test_query_a_ell1(alabar_index, strategy):
    matches = query(alabar_index, A, 1, strategy=strategy)
    got = [(m.context, m.ds, m.de, m.count, m.rep_position) for m in matches]
    assert got == expected_a_ell1()


def test_query_a_ell1_trace(alabar_index):
    trace = QueryTrace()
    query(alabar_index, A, 1, trace=trace)
    assert trace.rev_range == alabar_data.A_ELL1_REV_RANGE
    assert trace.part_starts == alabar_data.A_ELL1_PART_STARTS
    assert trace.mapped_ranges == alabar_data.A_ELL1_MAPPED


def test_query_a_ell0(alabar_index):
    matches = query(alabar_index, A, 0)
    assert len(matches) == 1
    m = matches[0]
    assert (m.ds, m.de, m.count) == (2, 9, 8)
    assert m.context == tuple(A)


def test_query_absent_pattern(alabar_index):
    assert query(alabar_index, [6, 6], 3) == []
    assert query(alabar_index, [1, 1], 2) == []


def test_query_abab(abab_index):
    ab = [1, 2]
    matches = query(abab_index, ab, 1)
    got = {m.context: (m.count, sorted(enumerate_occurrences(abab_index, m)))
           for m in matches}
    assert got == {
        (0, 1, 2, 1): (1, [1]),
        (2, 1, 2, 0): (1, [3]),
    }


def test_query_validation(alabar_index):
    with pytest.raises(EmptyPatternError):
        query(alabar_index, [], 1)
    with pytest.raises(SentinelInPatternError):
        query(alabar_index, [1, 0, 1], 1)
    with pytest.raises(ValueError):
        query(alabar_index, A, -1)


def test_map_via_psv_nsv_examples(alabar_index):
    assert map_via_psv_nsv(alabar_index, (6, 8), 1, 1) == (13, 15)
    assert map_via_psv_nsv(alabar_index, (3, 4), 1, 1) == (10, 11)
    with pytest.raises(BoundaryPartError):
        map_via_psv_nsv(alabar_index, (2, 2), 1, 1)


def test_map_via_cmin_examples(alabar_index):
    assert map_via_cmin(alabar_index, (3, 4), 1, 1) == (10, 11)
    assert map_via_cmin(alabar_index, (9, 9), 1, 1) == (16, 16)
    with pytest.raises(BoundaryPartError):
        map_via_cmin(alabar_index, (2, 2), 1, 1)


def test_mapping_strategies_agree_on_random_parts():
    rng = random.Random(21)
    for _ in range(15):
        t = load_text(naive.random_raw(rng, rng.randint(2, 150), 2))
        ix = build_index(t)
        for _ in range(30):
            p = naive.sample_codes(rng, t)
            ell = rng.randint(0, 6)
            s1, s2 = QueryStats(), QueryStats()
            m1 = query(ix, p, ell, strategy=MappingStrategy.PSV_NSV, stats=s1)
            m2 = query(ix, p, ell, strategy=MappingStrategy.CMIN, stats=s2)
            assert m1 == m2


def test_emit_boundary_example(alabar_index):
    match = emit_boundary_context(alabar_index, (2, 2), 1, 1)
    assert (match.ds, match.de, match.count) == (5, 5, 1)
    assert match.rep_position == 1 and match.p_offset == 0
    assert match.context == alabar_data.ctx("$al")


def test_emit_boundary_deep_padding(alabar_index):
    matches = query(alabar_index, [alabar_data.CODE[c] for c in "al"], 2)
    crossing = [m for m in matches if m.context[0] == 0]
    assert len(crossing) == 1
    m = crossing[0]
    assert (m.ds, m.de, m.count) == (5, 5, 1)
    assert m.context == alabar_data.ctx("$$alab")


def test_emit_boundary_rejects_wide_parts(alabar_index):
    with pytest.raises(NonSingletonBoundaryError):
        emit_boundary_context(alabar_index, (2, 3), 1, 1)


def test_enumerate_occurrences_examples(alabar_index):
    matches = query(alabar_index, A, 1)
    by_ctx = {m.context: m for m in matches}
    lab = by_ctx[alabar_data.ctx("lab")]
    assert sorted(enumerate_occurrences(alabar_index, lab)) == [3, 11]
    bound = by_ctx[alabar_data.ctx("$al")]
    assert enumerate_occurrences(alabar_index, bound) == [1]
    for m in matches:
        positions = enumerate_occurrences(alabar_index, m)
        assert len(positions) == m.count
        assert m.rep_position in positions


def test_extract_context_examples(alabar_index):
    assert extract_context(alabar_index, 16, 1, 1) == alabar_data.ctx("da$")
    assert extract_context(alabar_index, 5, 3, 0) == tuple(
        alabar_data.CODE[c] for c in "ara"
    )
    assert extract_context(alabar_index, 1, 1, 2) == alabar_data.ctx("$$ala")


def test_huge_ell_pads_every_context(alabar_index):
    ell = 40  # longer than the text: all contexts touch both terminators
    matches = query(alabar_index, A, ell)
    expected = naive.naive_occurrence_count(alabar_index.text, A)
    assert sum(m.count for m in matches) == expected
    assert all(m.count == 1 for m in matches)
    for m in matches:
        assert len(m.context) == 1 + 2 * ell
