"""Separating tuples, re-embeddings, the weight assignment algorithm, and
surveys over planar order ideals."""

from __future__ import annotations

from gmpy2 import mpq

from .bbscheme import BBScheme
from .orderideal import enumerate_planar
from .polyring import (
    BudgetExceeded,
    OrderingMatrix,
    Polynomial,
    SubstitutionMap,
    apply_map,
    coherentize,
    coherentize_ordered,
    degrevlex,
    degrevlex_rows,
    groebner_basis,
    leading_term,
    monic,
    normal_form,
    ordering_from_weights,
    rref,
    solve_linear,
    substitute,
    term_deg,
    term_div,
)

DEFAULT_MULT_BOUND = 4
DEFAULT_NODE_BUDGET = 2_000_000


class SeparatingWitness:
    """A certified Z-separating tuple: polynomials, weights, ordering, map."""

    __slots__ = ("Z", "F", "w", "sigma", "substitution")

    def __init__(self, Z, F, w, sigma, substitution):
        self.Z = tuple(Z)
        self.F = list(F)
        self.w = w
        self.sigma = sigma
        self.substitution = substitution

    def __repr__(self):
        return f"SeparatingWitness(|Z|={len(self.Z)})"


class ReembeddingResult:
    """Outcome of rewriting the generator catalog along a separating tuple."""

    __slots__ = ("scheme", "witness", "kept", "generators", "ambient_dim")

    def __init__(self, scheme, witness, kept, generators):
        self.scheme = scheme
        self.witness = witness
        self.kept = tuple(kept)
        self.generators = list(generators)
        self.ambient_dim = len(self.kept)

    def __repr__(self):
        return (
            f"ReembeddingResult(ambient_dim={self.ambient_dim},"
            f" generators={len(self.generators)})"
        )


# ---------------------------------------------------------------------------
# elimination engine
# ---------------------------------------------------------------------------


def _rref_block(polys, matrix):
    """Canonical RREF of a list of polynomials sharing an arrow degree."""
    mons = sorted(
        {m for p in polys for m in p.support()}, key=matrix.key, reverse=True
    )
    if not mons:
        return []
    col = {m: c for c, m in enumerate(mons)}
    rows = []
    for p in polys:
        row = [mpq(0)] * len(mons)
        for m, c in p.items():
            row[col[m]] = c
        rows.append(row)
    reduced, _ = rref(rows)
    arity = polys[0].arity
    out = []
    for row in reduced:
        mapping = {mons[c]: x for c, x in enumerate(row) if x}
        if mapping:
            out.append(Polynomial(arity, mapping))
    return out


class _ElimState:
    """Arrow-degree-blocked generator pool under a partial elimination.

    Only the (substituted) generator catalog is stored; products with
    monomials in the weight-zero variables are formed on demand, smallest
    multiplier degree first, so eliminations use the simplest combination
    that works.
    """

    __slots__ = ("scheme", "blocks", "order", "mono_by_deg", "mult_bound")

    def __init__(self, scheme, blocks, order, mono_by_deg, mult_bound):
        self.scheme = scheme
        self.blocks = blocks
        self.order = order  # list of (z, tail-at-elimination-time)
        self.mono_by_deg = mono_by_deg  # {deg: [(monomial, arrow degree)]}
        self.mult_bound = mult_bound

    def assigned(self):
        return frozenset(z for z, _ in self.order)

    def eliminable(self, z, avoid=None):
        """Tail h with z - h in the ideal and h free of the avoided
        variables (just z by default), or None."""
        scheme = self.scheme
        arity = scheme.arity
        avoid = {z} if avoid is None else set(avoid) | {z}
        D = scheme.arrow_degree(z)
        zmono = tuple(1 if k == z else 0 for k in range(arity))
        pool = []
        for b in range(self.mult_bound + 1):
            if b == 0:
                pool.extend(self.blocks.get(D, ()))
            else:
                for mono, E in self.mono_by_deg.get(b, ()):
                    src = tuple(d - e for d, e in zip(D, E))
                    for p in self.blocks.get(src, ()):
                        pool.append(mono * p)
            if not pool:
                continue
            bad = {
                m
                for p in pool
                for m in p.support()
                if any(m[u] > 0 for u in avoid)
            }
            bad.add(zmono)
            bad = sorted(bad)
            mat = [[p.coeff(m) for p in pool] for m in bad]
            rhs = [1 if m == zmono else 0 for m in bad]
            lam = solve_linear(mat, rhs)
            if lam is None:
                continue
            f = Polynomial.zero(arity)
            for c, p in zip(lam, pool):
                if c:
                    f = f + p * c
            h = Polynomial.monomial(arity, zmono) - f
            assert not any(h.contains_var(u) for u in avoid)
            return h
        return None

    def child(self, z, h=None):
        """State after eliminating z, or None if z is not eliminable."""
        if h is None:
            h = self.eliminable(z)
            if h is None:
                return None
        scheme = self.scheme
        sub = SubstitutionMap(scheme.arity, {z: h})
        drl = degrevlex(scheme.arity)
        blocks = {}
        for deg, polys in self.blocks.items():
            newp = [
                substitute(p, sub) if p.contains_var(z) else p for p in polys
            ]
            newp = [p for p in newp if p]
            if newp:
                blocks[deg] = _rref_block(newp, drl)
        return _ElimState(
            scheme,
            blocks,
            self.order + [(z, h)],
            self.mono_by_deg,
            self.mult_bound,
        )


def _c_monomials(arity, var_indices, max_deg):
    """All exponent tuples of degree 1..max_deg in the given variables."""
    out = []

    def gen(pos, remaining, current):
        if current:
            t = [0] * arity
            for k in current:
                t[k] += 1
            out.append(tuple(t))
        if remaining == 0:
            return
        for p in range(pos, len(var_indices)):
            current.append(var_indices[p])
            gen(p, remaining - 1, current)
            current.pop()

    gen(0, max_deg, [])
    return out


def _term_arrow_degree(scheme, term):
    """Arrow degree of a monomial given by its exponent tuple."""
    total = [0] * scheme.o.n
    for k, e in enumerate(term):
        if e:
            d = scheme.arrow_degree(k)
            for a in range(len(total)):
                total[a] += e * d[a]
    return tuple(total)


def _multiplier_index(scheme, var_indices, max_deg):
    """Monomials in the given variables, grouped by total degree."""
    by_deg = {}
    for t in _c_monomials(scheme.arity, var_indices, max_deg):
        mono = Polynomial.monomial(scheme.arity, t)
        by_deg.setdefault(term_deg(t), []).append(
            (mono, _term_arrow_degree(scheme, t))
        )
    return by_deg


def root_state(scheme, mult_bound=DEFAULT_MULT_BOUND):
    """Initial elimination state over the natural generator catalog."""
    gens = [g for g in scheme.natural_generators().values() if g]
    drl = degrevlex(scheme.arity)
    blocks = {}
    for p in gens:
        blocks.setdefault(scheme.poly_arrow_degree(p), []).append(p)
    blocks = {deg: _rref_block(polys, drl) for deg, polys in blocks.items()}
    zero_vars = [
        k for k in range(scheme.arity) if scheme.weight_degree(k) == 0
    ]
    mono_by_deg = (
        _multiplier_index(scheme, zero_vars, mult_bound)
        if mult_bound > 0 and zero_vars
        else {}
    )
    return _ElimState(scheme, blocks, [], mono_by_deg, mult_bound)


def _witness_from_state(scheme, state, Z):
    """Back-substitute the elimination order into a coherent witness."""
    arity = scheme.arity
    images = {}
    for z, h in reversed(state.order):
        used = h.variables() & set(images)
        for u in used:
            h = substitute(h, SubstitutionMap(arity, {u: images[u]}))
        images[z] = h
    w = [1 if k in images else 0 for k in range(arity)]
    F = []
    for z in Z:
        zmono = tuple(1 if k == z else 0 for k in range(arity))
        F.append(Polynomial.monomial(arity, zmono) - images[z])
    sigma = ordering_from_weights([w], arity)
    return SeparatingWitness(
        Z, F, [mpq(x) for x in w], sigma, SubstitutionMap(arity, images)
    )


def check_separating(scheme, Z, mult_bound=DEFAULT_MULT_BOUND):
    """Search for a coherent elimination of the tuple Z; None if not found.

    For MaxDeg order ideals a tuple touching a variable of non-positive
    weight degree is rejected immediately.
    """
    Z = sorted(set(Z))
    if scheme.o.is_maxdeg() and any(
        scheme.weight_degree(z) <= 0 for z in Z
    ):
        return None
    state = root_state(scheme, mult_bound)
    # Clean route: only eliminate a variable once its tail is free of all
    # still-remaining tuple variables.  Tails are then final substitution
    # images directly and never compound under back-substitution.
    remaining = list(Z)
    images = {}
    progress = True
    while remaining and progress:
        progress = False
        for z in list(remaining):
            h = state.eliminable(z, avoid=set(remaining))
            if h is not None:
                state = state.child(z, h)
                images[z] = h
                remaining.remove(z)
                progress = True
    if not remaining:
        arity = scheme.arity
        w = [1 if k in images else 0 for k in range(arity)]
        F = []
        for z in Z:
            zmono = tuple(1 if k == z else 0 for k in range(arity))
            F.append(Polynomial.monomial(arity, zmono) - images[z])
        sigma = ordering_from_weights([w], arity)
        return SeparatingWitness(
            Z, F, [mpq(x) for x in w], sigma,
            SubstitutionMap(arity, images),
        )
    # Fallback: unordered sequential elimination with back-substitution.
    state = root_state(scheme, mult_bound)
    remaining = list(Z)
    progress = True
    while remaining and progress:
        progress = False
        for z in list(remaining):
            child = state.child(z)
            if child is not None:
                state = child
                remaining.remove(z)
                progress = True
    if remaining:
        failed = set()

        def dfs(st, rem):
            if not rem:
                return st
            key = frozenset(rem)
            if key in failed:
                return None
            for z in rem:
                child = st.child(z)
                if child is not None:
                    found = dfs(child, [u for u in rem if u != z])
                    if found is not None:
                        return found
            failed.add(key)
            return None

        state = dfs(state, remaining)
        if state is None:
            return None
    return _witness_from_state(scheme, state, Z)


def greedy_elimination_substitution(scheme, elim, mult_bound=DEFAULT_MULT_BOUND):
    """Coherent substitution eliminating as many of the given variables as
    the sequential engine manages; returns (substitution, eliminated set)."""
    state = root_state(scheme, mult_bound)
    order = sorted(
        elim, key=lambda k: (-scheme.weight_degree(k), k)
    )
    remaining = list(order)
    progress = True
    while remaining and progress:
        progress = False
        for z in list(remaining):
            child = state.child(z)
            if child is not None:
                state = child
                remaining.remove(z)
                progress = True
    arity = scheme.arity
    images = {}
    for z, h in reversed(state.order):
        used = h.variables() & set(images)
        for u in used:
            h = substitute(h, SubstitutionMap(arity, {u: images[u]}))
        images[z] = h
    return SubstitutionMap(arity, images), set(images)


def c0_groebner_elimination(scheme, budget=10_000_000):
    """I(B_O) /\\ K[C0] by Groebner elimination with substitution preprocessing.

    A greedily found separating tuple is substituted away first (exact), and
    the remaining variables are eliminated with a block-order Groebner basis.
    """
    from .polyring import elimination_ideal

    c0 = set(scheme.c0_census())
    elim = [k for k in range(scheme.arity) if k not in c0]
    sub, done = greedy_elimination_substitution(scheme, elim)
    gens = [
        substitute(g, sub)
        for g in scheme.natural_generators().values()
        if not g.is_zero()
    ]
    gens = [g for g in gens if not g.is_zero()]
    rest = [k for k in elim if k not in done]
    return elimination_ideal(gens, scheme.arity, rest, budget)


def _in_span(g, pool):
    """Whether g is a linear combination of the pool polynomials."""
    support = sorted({m for p in pool for m in p.support()} | set(g.support()))
    mat = [[p.coeff(m) for p in pool] for m in support]
    rhs = [g.coeff(m) for m in support]
    return solve_linear(mat, rhs) is not None


def _member(g, others, drl, budget):
    """Budgeted ideal-membership test; False when the budget runs out."""
    try:
        basis_polys = groebner_basis(others, drl, budget)
        basis = [(leading_term(drl, q)[0], q) for q in basis_polys]
        return normal_form(g, basis, drl, [0, budget]).is_zero()
    except BudgetExceeded:
        return False


def _graded_minimalize(scheme, rows, budget=500_000):
    """Keep only generators not contained in the ideal of the others,
    preferring the simpler ones."""
    drl = degrevlex(scheme.arity)

    def complexity(g):
        return (g.total_degree(), len(g.support()))

    accepted = []
    for g in sorted(rows, key=complexity):
        if accepted and _member(g, accepted, drl, budget):
            continue
        accepted.append(g)
    changed = True
    while changed and len(accepted) > 1:
        changed = False
        for g in list(accepted):
            others = [q for q in accepted if q is not g]
            if _member(g, others, drl, budget):
                accepted.remove(g)
                changed = True
    return accepted


def zsep_reembed(
    scheme, witness, mult_bound=DEFAULT_MULT_BOUND, member_budget=500_000
):
    """Rewrite the generator catalog along a separating tuple and prune
    redundant generators."""
    sub = witness.substitution
    gens = [
        substitute(g, sub)
        for g in scheme.natural_generators().values()
        if not g.is_zero()
    ]
    gens = [g for g in gens if not g.is_zero()]
    drl = degrevlex(scheme.arity)
    blocks = {}
    for g in gens:
        blocks.setdefault(scheme.poly_arrow_degree(g), []).append(g)
    out = []
    for deg in sorted(blocks):
        out.extend(_rref_block(blocks[deg], drl))
    kept = sorted(set(range(scheme.arity)) - set(witness.Z))
    out = _graded_minimalize(scheme, out, member_budget)
    out.sort(key=lambda g: drl.key(leading_term(drl, g)[0]), reverse=True)
    return ReembeddingResult(scheme, witness, kept, out)


def best_separating_tuples(
    scheme, mult_bound=DEFAULT_MULT_BOUND, node_budget=DEFAULT_NODE_BUDGET
):
    """All maximal eliminable tuples of largest size, as witnesses.

    DFS over eliminable variables with global subset memoization; a node is
    maximal when no variable at all is eliminable from its state.
    """
    if scheme.o.is_maxdeg():
        universe = [
            k for k in range(scheme.arity) if scheme.weight_degree(k) > 0
        ]
    else:
        universe = list(range(scheme.arity))
    visited = set()
    maximal = {}
    nodes = [0]

    def dfs(state):
        key = state.assigned()
        extended = False
        for z in universe:
            if z in key:
                continue
            ckey = key | {z}
            if ckey in visited:
                extended = True
                continue
            h = state.eliminable(z)
            if h is None:
                continue
            extended = True
            visited.add(ckey)
            nodes[0] += 1
            if nodes[0] > node_budget:
                raise BudgetExceeded("tuple search node budget exhausted")
            dfs(state.child(z, h))
        if not extended:
            maximal[key] = state
    root = root_state(scheme, mult_bound)
    visited.add(frozenset())
    dfs(root)
    if not maximal:
        return []
    best = max(len(k) for k in maximal)
    out = []
    for key in sorted(maximal, key=lambda k: tuple(sorted(k))):
        if len(key) == best:
            Z = sorted(key)
            out.append(_witness_from_state(scheme, maximal[key], Z))
    return out


# ---------------------------------------------------------------------------
# weight assignment (planar)
# ---------------------------------------------------------------------------


class WeightAssignment:
    """Integer weights on the c-variables certifying non-exposed elimination."""

    __slots__ = ("scheme", "weights", "symbols", "chosen", "flags")

    def __init__(self, scheme, weights, symbols, chosen, flags):
        self.scheme = scheme
        self.weights = list(weights)
        self.symbols = dict(symbols)
        self.chosen = dict(chosen)
        self.flags = list(flags)

    def table(self):
        """Weights as a mu x nu matrix (rows over O, columns over the border)."""
        s = self.scheme
        return [
            [self.weights[s.cidx(i, j)] for j in range(s.nu)]
            for i in range(s.mu)
        ]


def _aff(const=0, sym=None, coeff=0):
    a = {None: const}
    if sym is not None and coeff:
        a[sym] = coeff
    return a


def _aff_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return out


def _aff_eval(a, pvals):
    return a[None] + sum(v * pvals[k] for k, v in a.items() if k is not None)


def weight_assignment(scheme):
    """The weight assignment for a planar order ideal's non-exposed variables."""
    o = scheme.o
    assert o.n == 2, "weight assignment is defined for planar order ideals"
    border = o.border()
    terms = o.terms
    exposed = set(scheme.exposure())
    plateaus, pflags = o.plateaus_and_legs()
    flags = list(pflags)
    catalog = scheme.natural_generators()

    def lab_ok(lab):
        """Designated labels fall back to a search when the pair is absent."""
        return lab if lab in catalog else None

    def shift(t, k, delta=1):
        u = list(t)
        u[k] += delta
        return tuple(u)

    up = {}
    for j, b in enumerate(border):
        for k in range(2):
            j2 = o.border_index(shift(b, k))
            if j2 is not None:
                up[j] = (k, j2)
                break
    pos = {}
    for pi, p in enumerate(plateaus):
        for l, j in enumerate(p["chain"], start=1):
            pos.setdefault(j, (pi, l))
    xk_exposed = {
        k: [
            j
            for j, b in enumerate(border)
            if b[k] >= 1 and o.index(shift(b, k, -1)) is not None
        ]
        for k in range(2)
    }

    weights = {}  # flat index -> affine weight
    chosen = {}  # flat index -> designated generator label (or None)
    symbols = []
    sym_vars = {}  # symbol -> list of (flat index, lambda)

    def wt_of(i, j):
        idx = scheme.cidx(i, j)
        if idx in exposed:
            return _aff(0)
        return weights.get(idx, _aff(0))

    def rowsum(m):
        total = _aff(0)
        for j in range(scheme.nu):
            total = _aff_add(total, wt_of(m, j))
        return total

    def is_x_side(idx):
        return scheme.arrow_degree(idx)[0] > 0

    def open_vars(i):
        return [
            (scheme.cidx(i, j), j)
            for j in range(scheme.nu)
            if scheme.cidx(i, j) not in exposed
            and scheme.cidx(i, j) not in weights
        ]

    def p_case(i, j, side):
        """Introduce a symbolic weight at a plateau endpoint column."""
        idx = scheme.cidx(i, j)
        sym = f"p{i + 1}_{j + 1}"
        symbols.append(sym)
        sym_vars[sym] = [(idx, 0)]
        weights[idx] = _aff(0, sym, 1)
        pi, _ = pos[j]
        leg = plateaus[pi]["xleg" if side == 0 else "yleg"]
        down, across = (0, 1) if side == 0 else (1, 0)
        if leg:
            chosen[idx] = lab_ok(("ND", leg[0] + 1, j + 1, i + 1))
            t = terms[i]
            lam = 1
            while lam <= len(leg) and t[down] >= lam:
                i_d = o.index(shift(t, down, -lam))
                if i_d is None:
                    break
                vidx = scheme.cidx(i_d, leg[lam - 1])
                if vidx in exposed or vidx in weights:
                    break
                weights[vidx] = _aff(-lam, sym, 1)
                sym_vars[sym].append((vidx, lam))
                if lam < len(leg):
                    bl, bnext = border[leg[lam - 1]], border[leg[lam]]
                    if shift(bnext, down) == bl:
                        chosen[vidx] = lab_ok(("ND", leg[lam] + 1, leg[lam - 1] + 1, i_d + 1))
                    else:
                        m = o.index(shift(terms[i_d], across))
                        if m is not None:
                            chosen[vidx] = lab_ok(
                                ("AR", leg[lam] + 1, leg[lam - 1] + 1, m + 1)
                                if side == 0
                                else ("AR", leg[lam - 1] + 1, leg[lam] + 1, m + 1)
                            )
                        else:
                            chosen[vidx] = None
                else:
                    chosen[vidx] = None
                lam += 1
        else:
            b = border[j]
            if b[down] >= 1:
                t_r = shift(b, down, -1)
                partner = o.border_index(shift(t_r, across))
                m = o.index(shift(terms[i], across))
                if partner is not None and m is not None:
                    chosen[idx] = lab_ok(
                        ("AR", partner + 1, j + 1, m + 1)
                        if side == 0
                        else ("AR", j + 1, partner + 1, m + 1)
                    )
                else:
                    chosen[idx] = None
                    flags.append(
                        f"no designated generator for {scheme.cname(idx)}"
                    )
            else:
                chosen[idx] = None
                flags.append(f"no designated generator for {scheme.cname(idx)}")

    degree = o.degree
    for d in range(degree, -1, -1):
        rows_d = [i for i, t in enumerate(terms) if sum(t) == d]
        # phase 1: columns with an up-neighbor
        for i in rows_d:
            for idx, j in open_vars(i):
                if j not in up:
                    continue
                k, j2 = up[j]
                i2 = o.index(shift(terms[i], k))
                if i2 is None:
                    flags.append(
                        f"{scheme.cname(idx)}: up-neighbor row left the order ideal"
                    )
                    continue
                total = _aff(1)
                total = _aff_add(total, wt_of(i2, j2))
                for jm in xk_exposed[k]:
                    total = _aff_add(total, wt_of(i2, jm))
                weights[idx] = total
                chosen[idx] = lab_ok(("ND", j + 1, j2 + 1, i2 + 1))
        # phase 2: plateau endpoint columns (symbolic weights)
        for i in rows_d:
            for idx, j in open_vars(i):
                if j not in pos:
                    continue
                pi, l = pos[j]
                chain = plateaus[pi]["chain"]
                side = 0 if is_x_side(idx) else 1
                if (side == 0 and l == 1) or (side == 1 and l == len(chain)):
                    p_case(i, j, side)
        # phase 3: inductive plateau moves
        for pi, p in enumerate(plateaus):
            chain = p["chain"]
            for l in range(2, len(chain) + 1):
                j = chain[l - 1]
                for i in rows_d:
                    idx = scheme.cidx(i, j)
                    if idx in exposed or idx in weights or not is_x_side(idx):
                        continue
                    t = terms[i]
                    m = o.index(shift(t, 1))
                    if m is None:
                        flags.append(
                            f"{scheme.cname(idx)}: x-side move row left the order ideal"
                        )
                        continue
                    total = _aff_add(_aff(1), rowsum(m))
                    if t[0] >= 1:
                        i2 = o.index(shift(shift(t, 1), 0, -1))
                        total = _aff_add(total, wt_of(i2, chain[l - 2]))
                    weights[idx] = total
                    chosen[idx] = lab_ok(("AR", chain[l - 2] + 1, j + 1, m + 1))
            for l in range(len(chain) - 1, 0, -1):
                j = chain[l - 1]
                for i in rows_d:
                    idx = scheme.cidx(i, j)
                    if idx in exposed or idx in weights or is_x_side(idx):
                        continue
                    t = terms[i]
                    m = o.index(shift(t, 0))
                    if m is None:
                        flags.append(
                            f"{scheme.cname(idx)}: y-side move row left the order ideal"
                        )
                        continue
                    total = _aff_add(_aff(1), rowsum(m))
                    if t[1] >= 1:
                        i2 = o.index(shift(shift(t, 0), 1, -1))
                        total = _aff_add(total, wt_of(i2, chain[l]))
                    weights[idx] = total
                    chosen[idx] = lab_ok(("AR", j + 1, chain[l] + 1, m + 1))
    for idx in range(scheme.arity):
        if idx not in exposed and idx not in weights:
            flags.append(f"{scheme.cname(idx)}: no weight rule applied")
            weights[idx] = _aff(0)

    # resolve the symbolic weights: smallest values making each designated
    # generator a strict weighted maximum at its variable
    linear_occurrences = {}
    for lab, g in catalog.items():
        for t in g.support():
            if sum(t) == 1:
                v = next(k for k, e in enumerate(t) if e)
                linear_occurrences.setdefault(v, []).append(lab)

    def eval_all(pvals):
        out = [0] * scheme.arity
        for idx, a in weights.items():
            out[idx] = _aff_eval(a, pvals)
        return out

    def required(idx, wint):
        """Smallest admissible weight of variable idx over candidate generators."""
        cands = []
        if chosen.get(idx):
            cands = [chosen[idx]]
        else:
            cands = linear_occurrences.get(idx, [])
        best = None
        for lab in cands:
            g = catalog[lab]
            worst = 0
            ok = True
            zmono_seen = False
            for t in g.support():
                if sum(t) == 1 and t[idx] == 1:
                    zmono_seen = True
                    continue
                if t[idx] >= 1:
                    ok = False
                    break
                tw = sum(e * wint[k] for k, e in enumerate(t) if e)
                worst = max(worst, tw)
            if ok and zmono_seen:
                need = worst + 1
                if best is None or need < best:
                    best = need
        return best

    pvals = {s: 1 for s in symbols}
    for _ in range(300):
        changed = False
        wint = eval_all(pvals)
        for sym in symbols:
            for idx, lam in sym_vars[sym]:
                need = required(idx, wint)
                if need is None:
                    continue
                if pvals[sym] < need + lam:
                    pvals[sym] = need + lam
                    changed = True
            if pvals[sym] < max(lam for _, lam in sym_vars[sym]) + 1:
                pvals[sym] = max(lam for _, lam in sym_vars[sym]) + 1
                changed = True
        if not changed:
            break
        wint = eval_all(pvals)
    else:
        flags.append("symbolic weight resolution did not converge")
    wint = eval_all(pvals)

    # verify: every non-exposed variable is the strict weighted maximum of
    # some generator containing it linearly
    final_chosen = {}
    for idx in range(scheme.arity):
        if idx in exposed:
            continue
        cands = ([chosen[idx]] if chosen.get(idx) else []) + [
            lab
            for lab in linear_occurrences.get(idx, [])
            if lab != chosen.get(idx)
        ]
        found = None
        for lab in cands:
            g = catalog[lab]
            ok = True
            saw = False
            for t in g.support():
                if sum(t) == 1 and t[idx] == 1:
                    saw = True
                    continue
                if t[idx] >= 1:
                    ok = False
                    break
                tw = sum(e * wint[k] for k, e in enumerate(t) if e)
                if tw >= wint[idx]:
                    ok = False
                    break
            if ok and saw:
                found = lab
                break
        if found is None:
            flags.append(
                f"{scheme.cname(idx)}: no generator certifies its weight"
            )
        else:
            final_chosen[idx] = found
        if wint[idx] <= 0:
            flags.append(f"{scheme.cname(idx)}: non-positive weight {wint[idx]}")
    return WeightAssignment(scheme, wint, pvals, final_chosen, flags)


def eliminate_non_exposed(scheme):
    """Coherent elimination of every non-exposed variable (planar)."""
    wa = weight_assignment(scheme)
    if wa.flags:
        raise BudgetExceeded(
            "weight assignment did not certify all variables: " + "; ".join(wa.flags)
        )
    catalog = scheme.natural_generators()
    Z = sorted(wa.chosen)
    F = [catalog[wa.chosen[z]] for z in Z]
    w = wa.weights
    sub = coherentize(F, Z, w)
    sigma = ordering_from_weights([w], scheme.arity)
    Fcoh = []
    for z in Z:
        zmono = tuple(1 if k == z else 0 for k in range(scheme.arity))
        Fcoh.append(
            Polynomial.monomial(scheme.arity, zmono) - sub.images[z]
        )
    wit = SeparatingWitness(Z, Fcoh, [mpq(x) for x in w], sigma, sub)
    return zsep_reembed(scheme, wit), wa


# ---------------------------------------------------------------------------
# simplicial separating tuples
# ---------------------------------------------------------------------------


def simplicial_separating_tuple(scheme):
    """The interior-variable separating tuple of a simplicial order ideal."""
    o = scheme.o
    assert o.is_simplicial(), "requires a simplicial order ideal"
    d = o.degree
    n = o.n
    interior = set(o.interior())
    Z = [
        scheme.cidx(i, j)
        for i, t in enumerate(o.terms)
        if t in interior
        for j in range(scheme.nu)
    ]
    row1 = [2 * scheme.weight_degree(k) - 1 for k in range(scheme.arity)]
    row2 = [0] * scheme.arity
    first_k = {}
    for idx in Z:
        deg = scheme.arrow_degree(idx)
        k = first_k.setdefault(deg, next(q for q, x in enumerate(deg) if x > 0))
        i, _ = scheme.cpair(idx)
        row2[idx] = o.terms[i][k]
    rows = [row1, row2] + degrevlex_rows(scheme.arity)
    sigma = OrderingMatrix(rows)
    catalog = scheme.natural_generators()
    F = []
    for idx in sorted(Z):
        i, j = scheme.cpair(idx)
        deg = scheme.arrow_degree(idx)
        k = first_k[deg]
        l = next(q for q in range(n) if q != k)
        bj = o.border()[j]
        other = list(bj)
        other[k] -= 1
        other[l] += 1
        j2 = o.border_index(tuple(other))
        assert j2 is not None
        m = o.index(tuple(
            e + (1 if q == l else 0) for q, e in enumerate(o.terms[i])
        ))
        assert m is not None
        lab = (
            ("AR", j + 1, j2 + 1, m + 1)
            if j < j2
            else ("AR", j2 + 1, j + 1, m + 1)
        )
        g = catalog[lab]
        lt, _ = leading_term(sigma, g)
        assert lt == tuple(
            1 if q == idx else 0 for q in range(scheme.arity)
        ), "selected generator does not lead with its variable"
        F.append(g)
    Z = sorted(Z)
    sub = coherentize_ordered(F, Z, sigma)
    Fcoh = []
    for z in Z:
        zmono = tuple(1 if k == z else 0 for k in range(scheme.arity))
        Fcoh.append(Polynomial.monomial(scheme.arity, zmono) - sub.images[z])
    w = [mpq(x) for x in row1]
    return SeparatingWitness(Z, Fcoh, w, sigma, sub)


def verify_lshape_pipeline():
    """Run the full L-shape re-embedding pipeline and report every check.

    Steps: separating re-embedding along the reference 13-tuple, the
    coordinate change by the reference automorphism, the final two-variable
    elimination, and the support lengths of the composite images.
    """
    from . import lshape_data as ld
    from .polyring import poly_det

    scheme = ld.lshape_scheme()
    arity = scheme.arity
    checks = {}
    report = {"checks": checks}

    f1 = ld.parse_poly(scheme, ld.F1_TEXT)
    f2 = ld.parse_poly(scheme, ld.F2_TEXT)
    Z = ld.printed_z(scheme)

    witness = check_separating(scheme, Z)
    checks["witness_found"] = witness is not None
    if witness is None:
        report["ok"] = False
        return report
    result = zsep_reembed(scheme, witness)
    got = {g for g in result.generators} | {g * -1 for g in result.generators}
    checks["two_generators"] = len(result.generators) == 2
    checks["f1_recovered"] = f1 in got
    checks["f2_recovered"] = f2 in got

    for name, rows in (("B1", ld.B1_TEXT), ("B2", ld.B2_TEXT)):
        mat = [[ld.parse_poly(scheme, e) for e in row] for row in rows]
        det = poly_det(mat)
        checks[f"{name}_unimodular"] = (
            det.total_degree() == 0 and not det.is_zero()
        )

    psi = {
        ld.var_index(scheme, n): ld.parse_poly(scheme, t)
        for n, t in ld.PSI_TEXT.items()
    }
    c21 = ld.var_index(scheme, "c21")
    c22 = ld.var_index(scheme, "c22")
    pf1 = apply_map(f1, psi)
    pf2 = apply_map(f2, psi)
    c21poly = Polynomial.variable(arity, c21)
    checks["psi_f1_is_c21"] = pf1 in (c21poly, c21poly * -1)

    # Step (3): substitute c21 -> 0 in psi(f2); the pair must then be
    # coherently (c21, c22)-separating, i.e. c22 appears with a constant
    # unit coefficient.
    zero21 = SubstitutionMap(arity, {c21: Polynomial.zero(arity)})
    h2 = substitute(pf2, zero21)
    c22mono = tuple(1 if k == c22 else 0 for k in range(arity))
    unit = h2.coeff(c22mono)
    linear_c22 = all(m[c22] == 0 for m in h2.support() if m != c22mono)
    checks["pair_c21_c22_separating"] = bool(unit) and linear_c22
    report["ok"] = all(checks.values())
    if not report["ok"]:
        return report

    c22_image = (h2 - Polynomial.monomial(arity, c22mono, unit)) * (
        mpq(-1) / unit
    )
    theta = SubstitutionMap(
        arity, {c21: Polynomial.zero(arity), c22: c22_image}
    )
    checks["theta_kills_generators"] = (
        substitute(substitute(pf1, zero21), theta).is_zero()
        and substitute(h2, theta).is_zero()
    )

    chat = [ld.var_index(scheme, n) for n in ld.CHAT_NAMES]
    checks["final_variables"] = sorted(chat) == sorted(
        set(result.kept) - {c21, c22}
    )

    lengths = []
    images = {}
    for idx in range(arity):
        img = Polynomial.variable(arity, idx)
        img = substitute(img, witness.substitution)
        img = apply_map(img, psi)
        img = substitute(img, theta)
        assert not img.contains_var(c21) and not img.contains_var(c22)
        images[idx] = img
        lengths.append(len(img.support()))
    report["support_lengths"] = tuple(lengths)
    report["images"] = images
    checks["support_lengths_match"] = (
        tuple(lengths) == ld.SUPPORT_LENGTHS
    )
    report["ok"] = all(checks.values())
    return report


def quadric_generator_rank(gens, arity):
    """Rank of the coefficient matrix of homogeneous quadratic generators."""
    mons = sorted({m for g in gens for m in g.support()})
    assert all(sum(m) == 2 for m in mons), "generators are not quadratic"
    col = {m: c for c, m in enumerate(mons)}
    rows = []
    for g in gens:
        row = [mpq(0)] * len(mons)
        for m, c in g.items():
            row[col[m]] = c
        rows.append(row)
    reduced, pivots = rref(rows)
    return len(reduced)


# ---------------------------------------------------------------------------
# optimal planar re-embeddings and the segment survey
# ---------------------------------------------------------------------------


def optimal_planar_reembed(scheme, mult_bound=DEFAULT_MULT_BOUND, existence_only=False):
    """Search candidate tuples built from cotangent classes for an optimal
    re-embedding (ambient dimension 2*mu).  Returns a report dict; with
    existence_only the search stops at the first optimal witness and skips
    the re-embedding itself."""
    o = scheme.o
    assert o.n == 2 and o.is_maxdeg()
    cot = scheme.cotangent()
    exposed = set(scheme.exposure())
    nonexp = set(range(scheme.arity)) - exposed
    base = set(cot["E0"]) | nonexp
    tilde = [sorted(set(cls) & exposed) for cls in cot["classes"]]
    tilde = [t for t in tilde if t]
    target = scheme.arity - 2 * scheme.mu

    def proper_subsets(cls):
        out = []
        for size in range(len(cls) - 1, -1, -1):
            out.extend(
                sorted(
                    [list(c) for c in _combinations(cls, size)],
                )
            )
        return out

    choice_lists = [proper_subsets(t) for t in tilde]
    optimal = []
    tried = 0
    found_any = []
    for combo in _product(choice_lists):
        Z = sorted(base.union(*[set(c) for c in combo]) if combo else base)
        if len(Z) < target or (existence_only and len(Z) != target):
            continue
        tried += 1
        wit = check_separating(scheme, Z, mult_bound)
        if wit is not None:
            found_any.append(wit)
            if len(Z) == target:
                if existence_only:
                    optimal.append((wit.Z, None))
                    break
                optimal.append((wit.Z, zsep_reembed(scheme, wit, mult_bound)))
    return {
        "target": target,
        "optimal": optimal,
        "separating": found_any,
        "classes": cot["classes"],
        "E0": cot["E0"],
        "candidates_tried": tried,
    }


def _combinations(seq, size):
    from itertools import combinations

    return combinations(seq, size)


def _product(lists):
    from itertools import product

    if not lists:
        return [()]
    return product(*lists)


def conjecture_survey(mu_max=8, mult_bound=DEFAULT_MULT_BOUND, workers=1):
    """Survey planar non-simplicial MaxDeg order ideals: one top-degree
    segment if and only if an optimal separating re-embedding exists."""
    ideals = []
    for mu in range(2, mu_max + 1):
        for o in enumerate_planar(mu):
            if o.is_maxdeg() and not o.is_simplicial():
                ideals.append(o)
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            rows = pool.map(_survey_one, [(o, mult_bound) for o in ideals])
    else:
        rows = [_survey_one((o, mult_bound)) for o in ideals]
    return rows


def _survey_one(args):
    o, mult_bound = args
    scheme = BBScheme(o)
    segments = o.segments()
    report = optimal_planar_reembed(scheme, mult_bound, existence_only=True)
    found = bool(report["optimal"])
    return {
        "terms": o.terms,
        "mu": o.mu,
        "segments": len(segments),
        "optimal_found": found,
        "consistent": (len(segments) == 1) == found,
    }
