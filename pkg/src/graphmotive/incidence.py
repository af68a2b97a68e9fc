"""Counts of (Q, f) pairs attached to a graph over F_q: Q a symmetric s x s
form of prescribed rank, f a map from the vertices into F_q^s with prescribed
span dimension, subject to f(u)^T Q f(v) = 0 across every edge.

Also houses the verifiers for the reduction identities relating these counts
(cone extensions, ambient-dimension reductions, span stratifications) and the
closed recursion that evaluates the nondegenerate pair count on forests
without any enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .counting import (
    DEFAULT_BUDGET,
    _require_budget,
    count_invertible,
    count_subspaces,
    count_symmetric_extensions,
    count_symmetric_rank,
    stats,
)
from .errors import BadParams, NotAForest, NotSimple
from .ffield import make_field, rank_from_index_rows
from .graphs import Graph
from .matroids import Matroid, PartialRank, count_X

_F_CHUNK = 1 << 15
_VEC_DIM_CAP = 4  # vectorized rank works through 4x4 minors

# ---------------------------------------------------------------------------
# symmetric forms grouped by rank


_sym_cache: dict[tuple[int, int], dict] = {}


def _sym_by_rank(s: int, q: int):
    """All symmetric s x s index matrices over F_q grouped by rank, as
    {rank: uint8 array of shape (count, s, s)}."""
    key = (s, q)
    if key in _sym_cache:
        return _sym_cache[key]
    import numpy as np

    from .vecops import VecField, decode_assignments

    if s == 0:
        out = {0: np.zeros((1, 0, 0), dtype=np.uint8)}
        _sym_cache[key] = out
        return out
    field = make_field(q)
    vf = VecField(field)
    cells = [(i, j) for i in range(s) for j in range(i, s)]
    total = q ** len(cells)
    stats.add(total)
    cols = decode_assignments(0, total, len(cells), q)
    mats = np.zeros((total, s, s), dtype=np.uint8)
    for pos, (i, j) in enumerate(cells):
        v = cols[:, pos]
        mats[:, i, j] = v
        if i != j:
            mats[:, j, i] = v
    ranks = vf.rank(mats)
    out = {r: mats[ranks == r] for r in range(s + 1)}
    _sym_cache[key] = out
    return out


def _edge_set(g: Graph) -> list[tuple[int, int]]:
    if not g.is_simple():
        raise NotSimple("incidence counts need a simple graph")
    return sorted({(min(u, v), max(u, v)) for u, v in g.edges})


def _decode_f(start: int, stop: int, n: int, s: int, q: int):
    import numpy as np

    from .vecops import decode_assignments

    cols = decode_assignments(start, stop, max(n * s, 1), q)
    return cols.reshape(stop - start, n, s) if n * s else np.zeros(
        (stop - start, 0, 0), dtype=np.uint8
    )


def _edge_ok(vf, fmats, Q, edges, q: int):
    """Boolean vector: all edge conditions f_u^T Q f_v = 0 hold."""
    import numpy as np

    B = fmats.shape[0]
    s = Q.shape[0]
    ok = np.ones(B, dtype=bool)
    if not edges:
        return ok
    support = sorted({v for e in edges for v in e})
    transformed = {}
    for v in support:
        W = np.zeros((B, s), dtype=np.uint8)
        for a in range(s):
            acc = None
            for b in range(s):
                qab = int(Q[a, b])
                if qab == 0:
                    continue
                t = vf.flat_mul[qab * q + fmats[:, v, b]]
                acc = t if acc is None else vf.add(acc, t)
            if acc is not None:
                W[:, a] = acc
        transformed[v] = W
    for u, v in edges:
        W = transformed[v]
        val = None
        for a in range(s):
            t = vf.mul(fmats[:, u, a], W[:, a])
            val = t if val is None else vf.add(val, t)
        ok &= val == 0
    return ok


# ---------------------------------------------------------------------------
# the full (rank, span-dim) table for one graph and ambient dimension


_table_memo: dict[tuple, dict[tuple[int, int], int]] = {}


def clear_incidence_cache() -> None:
    _table_memo.clear()


def _incidence_table(
    g: Graph, s: int, q: int, budget: int | None = None
) -> dict[tuple[int, int], int]:
    """counts[(r, k)] over all (Q, f) pairs satisfying the edge conditions,
    classified by the rank r of Q and the span dimension k of f."""
    key = (g.key(), s, q)
    got = _table_memo.get(key)
    if got is not None:
        return got
    edges = _edge_set(g)
    n = g.n
    raw = q ** (s * (s + 1) // 2 + s * n)
    _require_budget(raw, budget, "incidence scan")

    table = {
        (r, k): 0 for r in range(s + 1) for k in range(min(s, n) + 1)
    }
    if s == 0:
        table[(0, 0)] = 1
        _table_memo[key] = table
        return table
    if n == 0:
        syms = _sym_by_rank(s, q)
        for r, mats in syms.items():
            table[(r, 0)] = int(mats.shape[0])
        _table_memo[key] = table
        return table
    if n > _VEC_DIM_CAP or s > _VEC_DIM_CAP:
        table = _incidence_table_slow(g, s, q, budget)
        _table_memo[key] = table
        return table

    import numpy as np

    from .vecops import VecField

    field = make_field(q)
    vf = VecField(field)
    syms = _sym_by_rank(s, q)
    nf = q ** (n * s)
    total_q = sum(int(m.shape[0]) for m in syms.values())
    stats.add(nf * total_q)
    start = 0
    while start < nf:
        stop = min(start + _F_CHUNK, nf)
        fmats = _decode_f(start, stop, n, s, q)
        dims = vf.rank(fmats)
        for r, mats in syms.items():
            for qi in range(mats.shape[0]):
                ok = _edge_ok(vf, fmats, mats[qi], edges, q)
                if not ok.any():
                    continue
                hist = np.bincount(dims[ok], minlength=min(s, n) + 1)
                for k, c in enumerate(hist.tolist()):
                    if c:
                        table[(r, k)] += c
        start = stop
    _table_memo[key] = table
    return table


def _incidence_table_slow(
    g: Graph, s: int, q: int, budget: int | None = None
) -> dict[tuple[int, int], int]:
    """Pure-Python fallback for dimensions beyond the vectorized caps."""
    edges = _edge_set(g)
    n = g.n
    raw = q ** (s * (s + 1) // 2 + s * n)
    _require_budget(raw, budget, "incidence scan")
    stats.add(raw)
    field = make_field(q)
    add = field.add_table
    mul = field.mul_table
    cells = [(i, j) for i in range(s) for j in range(i, s)]
    table = {(r, k): 0 for r in range(s + 1) for k in range(min(s, n) + 1)}
    for qvals in product(range(q), repeat=len(cells)):
        Q = [[0] * s for _ in range(s)]
        for pos, (i, j) in enumerate(cells):
            Q[i][j] = qvals[pos]
            Q[j][i] = qvals[pos]
        r = rank_from_index_rows(field, [row[:] for row in Q])
        for fvals in product(range(q), repeat=n * s):
            f = [list(fvals[v * s : (v + 1) * s]) for v in range(n)]
            good = True
            for u, v in edges:
                val = 0
                for a in range(s):
                    inner = 0
                    for b in range(s):
                        inner = add[inner][mul[Q[a][b]][f[v][b]]]
                    val = add[val][mul[f[u][a]][inner]]
                if val != 0:
                    good = False
                    break
            if not good:
                continue
            k = rank_from_index_rows(field, [row[:] for row in f])
            table[(r, k)] += 1
    return table


# ---------------------------------------------------------------------------
# public counts


def count_A(
    g: Graph,
    s: int,
    r: int,
    k: int,
    q: int,
    budget: int | None = None,
    chunks: int = 1,
    parallel: bool = False,
) -> int:
    """Pairs (Q, f): Q symmetric s x s of rank exactly r, f into F_q^s with
    span dimension exactly k, every edge condition satisfied.

    chunks > 1 partitions the rank-r forms into strided slices (optionally
    scanned by threads) and bypasses the memo; totals are identical for
    every partition.
    """
    if s < 0 or r < 0 or k < 0:
        raise BadParams(f"parameters must be nonnegative, got s={s} r={r} k={k}")
    if r > s or k > min(s, g.n):
        return 0
    if chunks == 1:
        return _incidence_table(g, s, q, budget)[(r, k)]
    return _count_A_chunked(g, s, r, k, q, budget, chunks, parallel)


def _count_A_chunked(g, s, r, k, q, budget, chunks, parallel) -> int:
    if chunks < 1:
        raise BadParams(f"chunks must be positive, got {chunks}")
    edges = _edge_set(g)
    n = g.n
    raw = q ** (s * (s + 1) // 2 + s * n)
    _require_budget(raw, budget, "incidence scan")
    if s == 0 or n == 0 or n > _VEC_DIM_CAP or s > _VEC_DIM_CAP:
        # tiny or oversized cases: chunking has nothing to win
        return _incidence_table(g, s, q, budget)[(r, k)]

    import numpy as np

    from .vecops import VecField

    field = make_field(q)
    vf = VecField(field)
    mats = _sym_by_rank(s, q)[r]
    nf = q ** (n * s)
    stats.add(nf * int(mats.shape[0]))

    def scan(qidx: list[int]) -> int:
        total = 0
        start = 0
        while start < nf:
            stop = min(start + _F_CHUNK, nf)
            fmats = _decode_f(start, stop, n, s, q)
            dims = vf.rank(fmats)
            want = dims == k
            for qi in qidx:
                ok = _edge_ok(vf, fmats, mats[qi], edges, q)
                total += int((ok & want).sum())
            start = stop
        return total

    slices = [list(range(c, mats.shape[0], chunks)) for c in range(chunks)]
    slices = [sl for sl in slices if sl]
    if parallel and len(slices) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=len(slices)) as pool:
            parts = list(pool.map(scan, slices))
    else:
        parts = [scan(sl) for sl in slices]
    return sum(parts)


def count_A_slow(g: Graph, s: int, r: int, k: int, q: int, budget: int | None = None) -> int:
    """Reference implementation by direct nested enumeration."""
    if s < 0 or r < 0 or k < 0:
        raise BadParams(f"parameters must be nonnegative, got s={s} r={r} k={k}")
    if r > s or k > min(s, g.n):
        return 0
    return _incidence_table_slow(g, s, q, budget)[(r, k)]


_j_memo: dict[tuple, int] = {}


def count_J(g: Graph, s: int, q: int, budget: int | None = None) -> int:
    """Pairs (Q, f) with Q invertible and f unrestricted (any span)."""
    key = (g.key(), s, q)
    got = _j_memo.get(key)
    if got is not None:
        return got
    val = _count_J_constrained(g, s, q, (), budget)
    _j_memo[key] = val
    return val


def count_J_partial(
    g: Graph, s: int, pi: PartialRank, q: int, budget: int | None = None
) -> int:
    """Invertible-Q pairs whose map satisfies required span dimensions on
    the given vertex subsets.  Unsatisfiable requirements give zero."""
    if pi.ground != g.n:
        raise BadParams(
            f"requirements are over {pi.ground} elements, graph has {g.n} vertices"
        )
    for mask, need in pi.pairs:
        if need > min(s, bin(mask).count("1")):
            return 0
    return _count_J_constrained(g, s, q, tuple(sorted(pi.pairs)), budget)


def _count_J_constrained(
    g: Graph, s: int, q: int, constraints: tuple, budget: int | None
) -> int:
    edges = _edge_set(g)
    n = g.n
    raw = q ** (s * (s + 1) // 2 + s * n)
    _require_budget(raw, budget, "invertible-pair scan")
    if s == 0:
        # the empty form is invertible; the empty-span conditions want 0
        return 1 if all(need == 0 for _, need in constraints) else 0
    # the vertex count itself never caps the scan: only shapes that get
    # ranked (the form, and each constrained row subset) must stay small
    big_subset = any(
        bin(mask).count("1") > _VEC_DIM_CAP for mask, _ in constraints
    )
    if s > _VEC_DIM_CAP or big_subset:
        return _count_J_slow(g, s, q, constraints, budget)

    import numpy as np

    from .vecops import VecField

    field = make_field(q)
    vf = VecField(field)
    mats = _sym_by_rank(s, q)[s]
    nf = q ** (n * s)
    stats.add(nf * int(mats.shape[0]))
    members = {
        mask: [v for v in range(n) if mask & (1 << v)] for mask, _ in constraints
    }
    total = 0
    start = 0
    while start < nf:
        stop = min(start + _F_CHUNK, nf)
        fmats = _decode_f(start, stop, n, s, q)
        want = np.ones(stop - start, dtype=bool)
        for mask, need in constraints:
            sel = members[mask]
            if sel:
                sub = fmats[:, sel, :]
                want &= vf.rank(sub) == need
            else:
                want &= need == 0
        for qi in range(mats.shape[0]):
            ok = _edge_ok(vf, fmats, mats[qi], edges, q)
            total += int((ok & want).sum())
        start = stop
    return total


def _count_J_slow(g, s, q, constraints, budget) -> int:
    edges = _edge_set(g)
    n = g.n
    raw = q ** (s * (s + 1) // 2 + s * n)
    _require_budget(raw, budget, "invertible-pair scan")
    stats.add(raw)
    field = make_field(q)
    add = field.add_table
    mul = field.mul_table
    cells = [(i, j) for i in range(s) for j in range(i, s)]
    members = {
        mask: [v for v in range(n) if mask & (1 << v)] for mask, _ in constraints
    }
    total = 0
    for qvals in product(range(q), repeat=len(cells)):
        Q = [[0] * s for _ in range(s)]
        for pos, (i, j) in enumerate(cells):
            Q[i][j] = qvals[pos]
            Q[j][i] = qvals[pos]
        if rank_from_index_rows(field, [row[:] for row in Q]) != s:
            continue
        for fvals in product(range(q), repeat=n * s):
            f = [list(fvals[v * s : (v + 1) * s]) for v in range(n)]
            good = True
            for u, v in edges:
                val = 0
                for a in range(s):
                    inner = 0
                    for b in range(s):
                        inner = add[inner][mul[Q[a][b]][f[v][b]]]
                    val = add[val][mul[f[u][a]][inner]]
                if val != 0:
                    good = False
                    break
            if good:
                for mask, need in constraints:
                    rows = [f[v][:] for v in members[mask]]
                    if rank_from_index_rows(field, rows) != need:
                        good = False
                        break
            if good:
                total += 1
    return total


def count_K(g: Graph, s: int, q: int, budget: int | None = None) -> int:
    """Pairs with Q invertible and f of full span."""
    return count_A(g, s, s, s, q, budget)


def count_H(g: Graph, s: int, q: int, budget: int | None = None) -> int:
    """Pairs in ambient dimension n (the vertex count) with Q of rank s and
    f of full span n."""
    return count_A(g, g.n, s, g.n, q, budget)


def count_L(s: int, pi: PartialRank, q: int, budget: int | None = None) -> int:
    """Maps from the ground set into F_q^s with required span dimensions on
    the given subsets (no form, no edges)."""
    m = pi.ground
    raw = q ** (s * m)
    _require_budget(raw, budget, "span-constrained map scan")
    for mask, need in pi.pairs:
        if need > min(s, bin(mask).count("1")):
            return 0
    field = make_field(q)
    stats.add(raw)
    if (
        0 < m <= _VEC_DIM_CAP
        and 0 < s <= _VEC_DIM_CAP
        and raw >= 512
    ):
        import numpy as np

        from .vecops import VecField

        vf = VecField(field)
        total = 0
        start = 0
        while start < raw:
            stop = min(start + _F_CHUNK, raw)
            fmats = _decode_f(start, stop, m, s, q)
            want = np.ones(stop - start, dtype=bool)
            for mask, need in pi.pairs:
                sel = [v for v in range(m) if mask & (1 << v)]
                if sel:
                    want &= vf.rank(fmats[:, sel, :]) == need
                else:
                    want &= need == 0
            total += int(want.sum())
            start = stop
        return total
    total = 0
    for fvals in product(range(q), repeat=m * s):
        f = [list(fvals[v * s : (v + 1) * s]) for v in range(m)]
        good = True
        for mask, need in pi.pairs:
            rows = [f[v][:] for v in range(m) if mask & (1 << v)]
            if rank_from_index_rows(field, rows) != need:
                good = False
                break
        if good:
            total += 1
    return total


# ---------------------------------------------------------------------------
# forest recursion


def forest_J(forest: Graph, s: int, q: int) -> int:
    """Nondegenerate pair count on a forest by structural recursion: the
    empty graph contributes the invertible symmetric forms; an isolated
    vertex contributes a free factor q^s; removing a leaf w attached at v
    splits by whether f(v) vanishes.  Never enumerates."""
    if not forest.is_forest():
        raise NotAForest(f"graph has a cycle: {forest!r}")

    memo: dict[tuple, int] = {}

    def rec(g: Graph) -> int:
        if g.n == 0:
            return count_symmetric_rank(s, s, q)
        key = g.key()
        got = memo.get(key)
        if got is not None:
            return got
        degrees = [0] * g.n
        for u, v in g.edges:
            degrees[u] += 1
            degrees[v] += 1
        val = None
        for v in range(g.n):
            if degrees[v] == 0:
                val = q**s * rec(g.remove_vertex(v))
                break
        if val is None:
            w = next(v for v in range(g.n) if degrees[v] == 1)
            (nbr,) = [u if u != w else v for u, v in g.edges if w in (u, v)]
            peeled = g.remove_vertex(w)
            nbr_after = nbr - 1 if nbr > w else nbr
            val = q ** (s - 1) * (
                rec(peeled) + (q - 1) * rec(peeled.remove_vertex(nbr_after))
            )
        memo[key] = val
        return val

    return rec(forest)


# ---------------------------------------------------------------------------
# identity verification


@dataclass
class IdentityReport:
    name: str
    q: int
    params: dict
    lhs: int
    rhs: int
    equal: bool

    def __bool__(self) -> bool:
        return self.equal


def _attach_to_subset(g: Graph, subset: int, t: int) -> Graph:
    """t new vertices, each joined to every vertex in the subset."""
    if not 0 <= subset < (1 << g.n):
        raise BadParams(f"vertex subset mask {subset} out of range")
    if t < 0:
        raise BadParams(f"number of new vertices must be nonnegative, got {t}")
    hooks = [v for v in range(g.n) if subset & (1 << v)]
    edges = list(g.edges) + [
        (h, g.n + j) for j in range(t) for h in hooks
    ]
    return Graph(g.n + t, tuple(edges))


def verify_identity(
    name: str, params: dict, q: int, budget: int | None = None
) -> IdentityReport:
    """Evaluate both sides of a named counting identity by enumeration plus
    closed-form factors and report the comparison."""
    p = dict(params)

    def need(*keys):
        missing = [k for k in keys if k not in p]
        if missing:
            raise BadParams(f"identity {name!r} needs parameters {missing}")
        return [p[k] for k in keys]

    if name == "firstred":
        g, s, r, k = need("graph", "s", "r", "k")
        lhs = count_A(g, s, r, k, q, budget)
        rhs = count_subspaces(k, s, q) * sum(
            count_symmetric_extensions(s, r, k, j, q) * count_A(g, k, j, k, q, budget)
            for j in range(k + 1)
        )
    elif name == "secondred":
        g, s, r, k = need("graph", "s", "r", "k")
        n = g.n
        lhs = count_A(g, s, r, k, q, budget)
        rhs = count_subspaces(r, s, q) * sum(
            count_subspaces(n - k, n - l, q)
            * count_subspaces(k - l, s - r, q)
            * count_invertible(k - l, q)
            * q ** (l * (s - r))
            * count_A(g, r, r, l, q, budget)
            for l in range(k + 1)
        )
    elif name == "cor-secondred":
        g, s, r = need("graph", "s", "r")
        n = g.n
        lhs = count_A(g, s, r, s, q, budget)
        rhs = (
            count_subspaces(r, s, q)
            * count_subspaces(n - s, n - r, q)
            * count_invertible(s - r, q)
            * q ** (r * (s - r))
            * count_A(g, r, r, r, q, budget)
        )
    elif name == "Dreduction":
        g, s, r, k = need("graph", "s", "r", "k")
        extended = g.add_disjoint_vertex()
        lhs = count_A(extended, s, r, k, q, budget)
        rhs = q**k * count_A(g, s, r, k, q, budget)
        if k >= 1:
            rhs += (q**s - q ** (k - 1)) * count_A(g, s, r, k - 1, q, budget)
    elif name == "yuck":
        g, r = need("graph", "r")
        n = g.n
        if not 0 <= r <= n + 1:
            raise BadParams(f"rank parameter must lie in 0..{n + 1}, got {r}")
        extended = g.add_disjoint_vertex()
        lhs = count_H(extended, r, q, budget)
        rhs = q ** (n + r) * (q ** (n + 1) - 1) * count_H(g, r, q, budget)
        if r >= 1:
            rhs += (
                q ** (n + r - 1)
                * (q ** (n + 1) - 1)
                * (q - 1)
                * count_H(g, r - 1, q, budget)
            )
        if r >= 2:
            rhs += (
                q**n
                * (q ** (n + 1) - 1)
                * (q ** (n + 1) - q ** (r - 1))
                * count_H(g, r - 2, q, budget)
            )
    elif name == "Jyuck":
        g, s = need("graph", "s")
        lhs = count_J(g.add_disjoint_vertex(), s, q, budget)
        rhs = q**s * count_J(g, s, q, budget)
    elif name == "pi-strat":
        g, s, t, subset = need("graph", "s", "t", "subset")
        base: PartialRank = p.get("base") or PartialRank(g.n, ())
        if any(mask == subset for mask, _ in base.pairs):
            raise BadParams("base requirements already constrain the subset")
        extended = _attach_to_subset(g, subset, t)
        lifted = PartialRank(extended.n, base.pairs)
        lhs = count_J_partial(extended, s, lifted, q, budget)
        rhs = 0
        for i in range(s + 1):
            pi_i = PartialRank(g.n, base.pairs + ((subset, s - i),))
            rhs += q ** (t * i) * count_J_partial(g, s, pi_i, q, budget)
    elif name == "grassmann-factor":
        matroid: Matroid
        matroid, s = need("matroid", "s")
        lhs = count_X(matroid, s, q, budget)
        rhs = count_subspaces(matroid.rank, s, q) * count_X(
            matroid, matroid.rank, q, budget
        )
    else:
        raise BadParams(f"unknown identity {name!r}")
    return IdentityReport(
        name=name, q=q, params=params, lhs=lhs, rhs=rhs, equal=lhs == rhs
    )
