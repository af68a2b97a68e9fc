"""Point counts: polynomial zero scans, hypersurface complements,
symmetric-matrix strata, and the closed-form counting formulas.

Every engine answer here is compared against a brute-force oracle written
with nothing but the element-level field operations.
"""

from __future__ import annotations

import itertools

import pytest

from graphmotive import (
    BadArgs,
    BudgetExceeded,
    Graph,
    MultilinearPoly,
    TooLarge,
    complete,
    count_blocked_nondegenerate,
    count_blocked_rank,
    count_invertible,
    count_rank_maps,
    count_subspaces,
    count_supported_nondegenerate,
    count_symmetric_extensions,
    count_symmetric_rank,
    count_tree_complement,
    count_tree_support,
    count_zeros,
    cycle,
    discrete,
    make_field,
    path,
    rank_census,
    rank_from_index_rows,
    spanning_tree_poly,
    star,
    stats,
    strata_counts,
    symmetric_extension_census,
    symmetric_rank_census,
    tree_complement_poly,
    verify_apex_support_iso,
    verify_contract_delete_sums,
    verify_free_vertex_extension,
)
from graphmotive.counting import (
    _census_pattern,
    _count_full_rank_corner,
    _edge_pairs,
    extension_support,
)
from graphmotive.polys import evaluate


def zeros_oracle(poly, q):
    """Evaluate at every point with element-level arithmetic."""
    field = make_field(q)
    zeros = 0
    for point in itertools.product(field.elements, repeat=poly.nvars):
        if evaluate(poly, field, list(point)) == field.zero:
            zeros += 1
    return zeros


def test_count_zeros_against_evaluation_oracle():
    cases = [
        (MultilinearPoly.zero(2), (2, 3, 4, 5, 9)),
        (MultilinearPoly.const(2, 1), (2, 3, 4, 5, 9)),
        # the integer constant 3 vanishes exactly in characteristic 3
        (MultilinearPoly.const(2, 3), (2, 3, 4, 5, 9)),
        (MultilinearPoly.variable(2, 0), (2, 3, 4, 5, 9)),
        (spanning_tree_poly(cycle(3)), (2, 3, 4, 5, 9)),
        (tree_complement_poly(cycle(3)), (2, 3, 4, 5, 9)),
        (spanning_tree_poly(complete(4)), (2, 3)),
        (
            MultilinearPoly.variable(3, 0) * MultilinearPoly.variable(3, 1)
            - MultilinearPoly.variable(3, 2).scale(2),
            (2, 3, 4, 5, 9),
        ),
    ]
    for poly, q_list in cases:
        for q in q_list:
            assert count_zeros(poly, q) == zeros_oracle(poly, q)


def test_count_zeros_chunked_and_parallel_are_bit_for_bit():
    poly = spanning_tree_poly(complete(4))
    for q in (2, 3, 4):
        base = count_zeros(poly, q)
        for chunks in (1, 2, 3, 7, 16):
            assert count_zeros(poly, q, chunks=chunks) == base
            assert count_zeros(poly, q, chunks=chunks, parallel=True) == base
    with pytest.raises(BadArgs):
        count_zeros(poly, 2, chunks=0)


def test_count_zeros_budget_and_stats():
    poly = spanning_tree_poly(cycle(3))
    stats.reset()
    count_zeros(poly, 3)
    assert stats.evaluations == 27
    with pytest.raises(BudgetExceeded) as info:
        count_zeros(poly, 3, budget=26)
    assert info.value.required == 27 and info.value.budget == 26


def test_hypersurface_complements_on_cycles():
    # one independent cycle: the complement count collapses to q^m - q^(m-1)
    for n in (3, 4, 5):
        g = cycle(n)
        for q in (2, 3, 4, 5):
            assert count_tree_complement(g, q) == q**n - q ** (n - 1)
            expected = q**g.m - zeros_oracle(spanning_tree_poly(g), q)
            assert count_tree_support(g, q) == expected


def test_hypersurface_complements_against_oracle():
    corpus = [
        complete(2),
        path(3),
        star(3),
        complete(4),
        Graph(2, ((0, 1), (0, 1))),
        Graph(3, ((0, 1), (1, 2), (2, 2))),
        Graph(4, ((0, 1), (2, 3))),  # disconnected: empty tree sum
    ]
    for g in corpus:
        for q in (2, 3):
            assert count_tree_complement(g, q) == q**g.m - zeros_oracle(
                tree_complement_poly(g), q
            )
            assert count_tree_support(g, q) == q**g.m - zeros_oracle(
                spanning_tree_poly(g), q
            )


def test_strata_counts_consistency():
    g = cycle(3)
    for q in (2, 3):
        st = strata_counts(g, q)
        total_zeros = q**g.m - count_tree_support(g, q)
        assert st.zero_on[0] == total_zeros
        assert sum(st.zero_exactly_on.values()) == total_zeros
        # direct oracle for each closed stratum: zero out S and count zeros
        # of the restricted polynomial over the remaining coordinates
        field = make_field(q)
        poly = spanning_tree_poly(g)
        for s in range(1 << g.m):
            free = [e for e in range(g.m) if not s >> e & 1]
            hits = 0
            for vals in itertools.product(field.elements, repeat=len(free)):
                point = [field.zero] * g.m
                for pos, e in enumerate(free):
                    point[e] = vals[pos]
                if evaluate(poly, field, point) == field.zero:
                    hits += 1
            assert st.zero_on[s] == hits
    long_path = path(22)
    with pytest.raises(TooLarge):
        strata_counts(long_path, 2)


def test_contract_delete_signed_sums():
    for g in [complete(2), path(3), cycle(3), star(3), Graph(2, ((0, 1), (0, 1)))]:
        for q in (2, 3):
            assert verify_contract_delete_sums(g, q)


# ---------------------------------------------------------------------------
# symmetric matrices under zero patterns


def pattern_census_oracle(d, q, zero_pairs):
    """Pure element-level enumeration of constrained symmetric matrices."""
    field = make_field(q)
    cells = [
        (i, j)
        for i in range(d)
        for j in range(i, d)
        if i == j or (i, j) not in zero_pairs
    ]
    counts = {}
    for vals in itertools.product(range(q), repeat=len(cells)):
        rows = [[0] * d for _ in range(d)]
        for pos, (i, j) in enumerate(cells):
            rows[i][j] = vals[pos]
            rows[j][i] = vals[pos]
        r = rank_from_index_rows(field, rows)
        counts[r] = counts.get(r, 0) + 1
    return counts


def test_symmetric_rank_census_against_closed_form_and_oracle():
    for d in (0, 1, 2, 3):
        for q in (2, 3, 4):
            census = symmetric_rank_census(d, q)
            assert census == {
                r: c
                for r in range(d + 1)
                if (c := count_symmetric_rank(d, r, q))
            }
            assert pattern_census_oracle(d, q, frozenset()) == census
    assert symmetric_rank_census(4, 2) == {
        r: c for r in range(5) if (c := count_symmetric_rank(4, r, 2))
    }


def all_patterns(d):
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    for r in range(len(pairs) + 1):
        for combo in itertools.combinations(pairs, r):
            yield frozenset(combo)


def test_pattern_census_against_element_oracle():
    for d in (1, 2, 3):
        for q in (2, 3):
            for pattern in all_patterns(d):
                assert _census_pattern(d, q, pattern, None) == pattern_census_oracle(
                    d, q, pattern
                )


def test_corner_full_rank_shortcut_against_census():
    # the held-out-diagonal evaluation path must agree with the plain scan
    # for every zero pattern it is eligible for
    for d in (2, 3, 4):
        for q in (2, 3, 4):
            if (d, q) == (4, 4):
                continue  # covered at q=2,3; the q=4 scan alone costs ~30 s
            for pattern in all_patterns(d):
                full = _census_pattern(d, q, pattern, None).get(d, 0)
                assert _count_full_rank_corner(d, q, pattern, None) == full


def test_blocked_and_supported_counts():
    for g in [discrete(2), complete(2), path(3), cycle(3), complete(3)]:
        for q in (2, 3):
            census = pattern_census_oracle(g.n, q, set(_edge_pairs(g)))
            for r in range(g.n + 1):
                assert count_blocked_rank(g, r, q) == census.get(r, 0)
            assert count_blocked_nondegenerate(g, q) == census.get(g.n, 0)
            comp = g.complement()
            assert count_supported_nondegenerate(g, q) == pattern_census_oracle(
                g.n, q, set(_edge_pairs(comp))
            ).get(g.n, 0)


def test_free_vertex_and_apex_checks():
    for g in [discrete(1), complete(2), path(3), cycle(3)]:
        for q in (2, 3):
            assert verify_free_vertex_extension(g, q)
            assert verify_apex_support_iso(g, q)


# ---------------------------------------------------------------------------
# closed forms


def test_invertible_count_against_census():
    for q in (2, 3, 4):
        for n in (0, 1, 2):
            assert count_invertible(n, q) == rank_census(n, n, q).get(n, 0)
    assert count_invertible(3, 2) == rank_census(3, 3, 2)[3] == 168
    assert count_invertible(0, 5) == 1
    with pytest.raises(BadArgs):
        count_invertible(-1, 2)


def test_rank_maps_against_census():
    for q in (2, 3):
        for e in (0, 1, 2, 3):
            for f in (0, 1, 2, 3):
                if q ** (e * f) > 20000:
                    continue
                census = rank_census(e, f, q)
                for r in range(min(e, f) + 1):
                    assert count_rank_maps(e, f, r, q) == census.get(r, 0)
                # impossible ranks count zero
                assert count_rank_maps(e, f, min(e, f) + 1, q) == 0
    with pytest.raises(BadArgs):
        count_rank_maps(2, 2, -1, 2)


def test_subspace_counts():
    # Grassmannian sizes by direct quotient of the rank census
    for q in (2, 3):
        for n in (0, 1, 2, 3):
            for k in range(n + 1):
                full = rank_census(k, n, q).get(k, 0) if k else 1
                assert count_subspaces(k, n, q) == full // count_invertible(k, q)
    assert count_subspaces(1, 2, 2) == 3
    assert count_subspaces(2, 4, 2) == 35
    # complement symmetry and out-of-range conventions
    for q in (2, 3):
        for n in range(5):
            for k in range(n + 1):
                assert count_subspaces(k, n, q) == count_subspaces(n - k, n, q)
    assert count_subspaces(-1, 3, 2) == 0
    assert count_subspaces(4, 3, 2) == 0
    assert count_subspaces(0, -1, 2) == 0
    assert count_subspaces(0, 0, 7) == 1


def test_symmetric_rank_closed_form_values():
    assert count_symmetric_rank(2, 2, 2) == 4
    for d in (0, 1, 2, 3):
        for q in (2, 3, 4):
            assert sum(count_symmetric_rank(d, r, q) for r in range(d + 1)) == q ** (
                d * (d + 1) // 2
            )
    assert count_symmetric_rank(2, 3, 5) == 0
    with pytest.raises(BadArgs):
        count_symmetric_rank(-1, 0, 2)
    with pytest.raises(BadArgs):
        count_symmetric_rank(2, -1, 2)


# ---------------------------------------------------------------------------
# bordered extensions


def test_extension_counts_against_census():
    for q in (2, 3):
        for d1 in (0, 1, 2):
            for d2 in range(d1, 4):
                for r1 in range(d1 + 1):
                    census = symmetric_extension_census(d2, d1, r1, q)
                    for r2 in range(d2 + 1):
                        got = count_symmetric_extensions(d2, r2, d1, r1, q)
                        assert got == census.get(r2, 0)
                        assert (got > 0) == extension_support(d2, r2, d1, r1)


def test_extension_counts_depend_only_on_base_rank():
    field = make_field(3)
    # two different rank-1 bases and a rank-2 base that is not diagonal
    bases = [
        (1, [[1, 1], [1, 1]]),
        (1, [[0, 0], [0, 2]]),
        (2, [[0, 1], [1, 0]]),
    ]
    for r1, rows in bases:
        census = symmetric_extension_census(3, 2, r1, 3, base_rows=rows)
        for r2 in range(4):
            assert census.get(r2, 0) == count_symmetric_extensions(3, r2, 2, r1, 3)
    with pytest.raises(BadArgs):
        symmetric_extension_census(3, 2, 1, 3, base_rows=[[0, 1], [0, 0]])
    with pytest.raises(BadArgs):
        symmetric_extension_census(3, 2, 2, 3, base_rows=[[1, 0], [0, 0]])
    assert field is not None


def test_extension_row_sums_telescope():
    # summing over the target rank recovers the number of ways to border:
    # q^(d1+1) new entries
    for q in (2, 3):
        for d1 in (0, 1, 2, 3):
            for r1 in range(d1 + 1):
                total = sum(
                    count_symmetric_extensions(d1 + 1, r2, d1, r1, q)
                    for r2 in range(d1 + 2)
                )
                assert total == q ** (d1 + 1)


def test_extension_bad_params():
    with pytest.raises(BadArgs):
        count_symmetric_extensions(1, 0, 2, 0, 2)  # shrinking is not extending
    with pytest.raises(BadArgs):
        count_symmetric_extensions(2, 0, -1, 0, 2)
    # out-of-range ranks are just empty counts
    assert count_symmetric_extensions(3, 5, 2, 1, 2) == 0
    assert count_symmetric_extensions(3, 1, 2, 2, 2) == 0
