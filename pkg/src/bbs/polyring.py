"""Exact sparse polynomial arithmetic over Q with matrix term orderings.

Terms are dense exponent tuples, coefficients are gmpy2.mpq.  The module also
provides substitution maps, coherent straightening of generator tuples, a
budgeted Buchberger engine, elimination ideals, and an exact rational
feasibility LP used to realize term orderings from weight constraints.
"""

from __future__ import annotations

from operator import add as _add

from gmpy2 import mpq

DEFAULT_GB_BUDGET = 10_000_000

LESS, EQUAL, GREATER = -1, 0, 1


class BudgetExceeded(Exception):
    """Raised when a computation exceeds its reduction-step budget."""


# ---------------------------------------------------------------------------
# variables and terms
# ---------------------------------------------------------------------------


class VarTable:
    """An ordered list of variable names with index lookup."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        assert len(set(names)) == len(names), "duplicate variable names"
        self.names = names
        self._index = {n: k for k, n in enumerate(names)}

    @property
    def arity(self):
        return len(self.names)

    def index(self, name):
        return self._index[name]

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"VarTable({list(self.names)!r})"


def term_mul(t, u):
    """Product of two exponent tuples."""
    return tuple(map(_add, t, u))


def term_div(t, u):
    """Quotient t/u as an exponent tuple, or None if u does not divide t."""
    out = []
    for a, b in zip(t, u):
        if a < b:
            return None
        out.append(a - b)
    return tuple(out)


def term_lcm(t, u):
    """Componentwise max of two exponent tuples."""
    return tuple(max(a, b) for a, b in zip(t, u))


def term_deg(t):
    """Total degree of an exponent tuple."""
    return sum(t)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """An immutable sparse polynomial: dict from exponent tuple to mpq."""

    __slots__ = ("arity", "_m", "_hash")

    def __init__(self, arity, mapping=None):
        self.arity = arity
        m = {}
        if mapping:
            for t, c in mapping.items():
                c = mpq(c)
                if c != 0:
                    assert len(t) == arity
                    m[t] = c
        self._m = m
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity):
        return cls(arity)

    @classmethod
    def constant(cls, arity, c):
        return cls(arity, {(0,) * arity: mpq(c)})

    @classmethod
    def variable(cls, arity, idx):
        t = [0] * arity
        t[idx] = 1
        return cls(arity, {tuple(t): mpq(1)})

    @classmethod
    def monomial(cls, arity, term, coeff=1):
        return cls(arity, {tuple(term): mpq(coeff)})

    # -- inspection ---------------------------------------------------------

    def is_zero(self):
        return not self._m

    def items(self):
        return self._m.items()

    def support(self):
        return self._m.keys()

    def coeff(self, term):
        return self._m.get(tuple(term), mpq(0))

    def total_degree(self):
        return max((term_deg(t) for t in self._m), default=-1)

    def variables(self):
        """Indices of variables occurring in the polynomial."""
        out = set()
        for t in self._m:
            for k, e in enumerate(t):
                if e:
                    out.add(k)
        return out

    def contains_var(self, idx):
        return any(t[idx] for t in self._m)

    def degree_in(self, idx):
        return max((t[idx] for t in self._m), default=0)

    def __len__(self):
        return len(self._m)

    def __bool__(self):
        return bool(self._m)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self._m == other._m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._m.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        m = dict(self._m)
        for t, c in other._m.items():
            v = m.get(t, mpq(0)) + c
            if v:
                m[t] = v
            else:
                m.pop(t, None)
        return Polynomial._raw(self.arity, m)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial._raw(self.arity, {t: -c for t, c in self._m.items()})

    def __sub__(self, other):
        return self.__add__(self._coerce(other).__neg__())

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            m = {}
            get = m.get
            items2 = list(other._m.items())
            for t1, c1 in self._m.items():
                for t2, c2 in items2:
                    t = term_mul(t1, t2)
                    v = get(t)
                    v = c1 * c2 if v is None else v + c1 * c2
                    if v:
                        m[t] = v
                    else:
                        del m[t]
            return Polynomial._raw(self.arity, m)
        c = mpq(other)
        if c == 0:
            return Polynomial.zero(self.arity)
        return Polynomial._raw(self.arity, {t: c * v for t, v in self._m.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        assert n >= 0
        out = Polynomial.constant(self.arity, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            assert other.arity == self.arity
            return other
        return Polynomial.constant(self.arity, other)

    @classmethod
    def _raw(cls, arity, m):
        p = cls.__new__(cls)
        p.arity = arity
        p._m = m
        p._hash = None
        return p

    # -- display ------------------------------------------------------------

    def render(self, vt, order=None):
        """Human-readable form, terms sorted by the given ordering (or degrevlex)."""
        if self.is_zero():
            return "0"
        if order is None:
            order = degrevlex(self.arity)
        parts = []
        for t in sorted(self._m, key=order.key, reverse=True):
            c = self._m[t]
            mon = "*".join(
                f"{vt.names[k]}" + (f"^{e}" if e > 1 else "")
                for k, e in enumerate(t)
                if e
            )
            if not mon:
                mon = str(abs(c))
                body = mon
            else:
                a = abs(c)
                body = mon if a == 1 else f"{a}*{mon}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        s = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Polynomial({self.arity}, {self._m!r})"


# ---------------------------------------------------------------------------
# matrix term orderings
# ---------------------------------------------------------------------------


class OrderingMatrix:
    """A term ordering given by a rational matrix with full column rank.

    Terms compare lexicographically by rows of (matrix . exponents); the
    first nonzero entry of every column must be positive so the ordering is
    a genuine term ordering (1 is smallest, multiplication is monotone).
    """

    __slots__ = ("rows", "arity", "_keys", "_cols", "_nrows")

    def __init__(self, rows):
        rows = tuple(tuple(mpq(x) for x in row) for row in rows)
        assert rows, "ordering matrix needs at least one row"
        arity = len(rows[0])
        assert all(len(r) == arity for r in rows)
        for col in range(arity):
            lead = next((r[col] for r in rows if r[col] != 0), None)
            assert lead is not None and lead > 0, (
                f"column {col}: first nonzero entry must be positive"
            )
        assert _rank([list(r) for r in rows]) == arity, "matrix must have full column rank"
        self.rows = rows
        self.arity = arity
        self._keys = {}
        self._nrows = len(rows)
        # sparse column form with plain ints where exact, so key() touches
        # only the nonzero matrix entries of the variables actually present
        def shrink(x):
            return int(x) if x.denominator == 1 else x

        self._cols = tuple(
            tuple(
                (j, shrink(rows[j][i]))
                for j in range(self._nrows)
                if rows[j][i]
            )
            for i in range(arity)
        )

    def key(self, term):
        """Sort key: tuple of row values; bigger key = bigger term."""
        k = self._keys.get(term)
        if k is None:
            tot = [0] * self._nrows
            cols = self._cols
            for i, e in enumerate(term):
                if e:
                    for j, v in cols[i]:
                        tot[j] += e * v
            k = tuple(tot)
            # the memo is a cache, not a table: long computations on wide
            # rings would otherwise grow it without bound
            if len(self._keys) >= 200_000:
                self._keys.clear()
            self._keys[term] = k
        return k

    def compare(self, t, u):
        a, b = self.key(t), self.key(u)
        if a < b:
            return LESS
        if a > b:
            return GREATER
        return EQUAL


def compare_terms(matrix, t, u):
    """Compare two terms under an OrderingMatrix; returns LESS/EQUAL/GREATER."""
    return matrix.compare(t, u)


def degrevlex_rows(arity):
    """Degrevlex rows: total degree, then reversed negated coordinates."""
    rows = [[1] * arity]
    for k in range(arity - 1, 0, -1):
        row = [0] * arity
        row[k] = -1
        rows.append(row)
    if arity == 1:
        return rows
    return rows


_DRL_CACHE = {}


def degrevlex(arity):
    """The degrevlex OrderingMatrix (first variable largest)."""
    m = _DRL_CACHE.get(arity)
    if m is None:
        m = OrderingMatrix(degrevlex_rows(arity))
        _DRL_CACHE[arity] = m
    return m


def ordering_from_weights(weight_rows, arity):
    """Ordering from one or more non-negative weight rows, degrevlex tie-break."""
    rows = [list(r) for r in weight_rows]
    assert all(len(r) == arity for r in rows)
    rows.extend(degrevlex_rows(arity))
    return OrderingMatrix(rows)


def leading_term(matrix, f):
    """(term, coefficient) of the largest monomial of f; f must be nonzero."""
    assert not f.is_zero()
    t = max(f.support(), key=matrix.key)
    return t, f.coeff(t)


def monic(f, matrix):
    """Scale f so its leading coefficient is 1."""
    if f.is_zero():
        return f
    _, c = leading_term(matrix, f)
    return f * (1 / c)


# ---------------------------------------------------------------------------
# exact linear algebra helpers
# ---------------------------------------------------------------------------


def _rank(mat):
    """Rank of a matrix (list of lists of mpq-coercible entries)."""
    mat = [[mpq(x) for x in row] for row in mat]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        row += 1
        rank += 1
        if row == len(mat):
            break
    return rank


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    mat = [[mpq(x) for x in row] for row in mat]
    pivots = []
    row = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        if row == len(mat):
            break
        piv = next((r for r in range(row, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    return mat[:row], pivots


def solve_linear(mat, rhs):
    """One solution x of mat.x = rhs over Q, or None (mat: m rows, n cols)."""
    m = len(mat)
    aug = [[mpq(x) for x in row] + [mpq(rhs[r])] for r, row in enumerate(mat)]
    n = len(mat[0]) if m else 0
    rows, pivots = rref(aug) if m else ([], [])
    # free variables are set to 0, so each pivot variable equals the rhs entry
    x = [mpq(0)] * n
    for r, row in enumerate(rows):
        piv = pivots[r]
        if piv == n:
            return None  # inconsistent: pivot in the rhs column
        x[piv] = row[n]
    return x


def poly_det(rows):
    """Determinant of a square matrix of Polynomials (minor expansion, memoized)."""
    n = len(rows)
    arity = rows[0][0].arity
    cache = {}

    def minor(row, cols):
        if not cols:
            return Polynomial.constant(arity, 1)
        key = (row, cols)
        if key in cache:
            return cache[key]
        total = Polynomial.zero(arity)
        for pos, col in enumerate(cols):
            entry = rows[row][col]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        cache[key] = total
        return total

    return minor(0, tuple(range(n)))


# ---------------------------------------------------------------------------
# substitution
# ---------------------------------------------------------------------------


class SubstitutionMap:
    """A coherent substitution: assigned variables never occur in any image."""

    __slots__ = ("arity", "images")

    def __init__(self, arity, images):
        self.arity = arity
        self.images = dict(images)
        for idx, img in self.images.items():
            assert isinstance(img, Polynomial) and img.arity == arity
        assigned = set(self.images)
        for img in self.images.values():
            bad = assigned & img.variables()
            assert not bad, f"substitution is not coherent: {sorted(bad)} occur in an image"

    def __contains__(self, idx):
        return idx in self.images

    def __len__(self):
        return len(self.images)


def substitute(f, sub):
    """Apply a SubstitutionMap to a polynomial."""
    if not sub.images:
        return f
    touched = set(sub.images) & f.variables()
    if not touched:
        return f
    arity = f.arity
    powers = {}

    def power(idx, e):
        key = (idx, e)
        p = powers.get(key)
        if p is None:
            p = sub.images[idx] ** e
            powers[key] = p
        return p

    out = {}
    for t, c in f.items():
        rest = list(t)
        factors = []
        for idx in touched:
            if t[idx]:
                factors.append(power(idx, t[idx]))
                rest[idx] = 0
        term = Polynomial.monomial(arity, tuple(rest), c)
        for p in factors:
            term = term * p
        for u, v in term.items():
            w = out.get(u)
            w = v if w is None else w + v
            if w:
                out[u] = w
            else:
                del out[u]
    return Polynomial._raw(arity, out)


def apply_map(f, images):
    """Apply a ring endomorphism given by {var index: Polynomial} images.

    Unlike SubstitutionMap, images may mention the mapped variables; the
    substitution is simultaneous.
    """
    arity = f.arity
    powers = {}

    def power(idx, e):
        key = (idx, e)
        p = powers.get(key)
        if p is None:
            p = images[idx] ** e
            powers[key] = p
        return p

    out = Polynomial.zero(arity)
    for t, c in f.items():
        rest = list(t)
        factors = []
        for idx, e in enumerate(t):
            if e and idx in images:
                factors.append(power(idx, e))
                rest[idx] = 0
        term = Polynomial.monomial(arity, tuple(rest), c)
        for p in factors:
            term = term * p
        out = out + term
    return out


def weighted_degree(term, w):
    """Weight of a term under a weight vector."""
    return sum(wi * e for wi, e in zip(w, term) if e)


def coherentize(F, Z, w, max_passes=10_000):
    """Straighten (f_1..f_s) with weighted leading terms (z_1..z_s) into a
    coherent SubstitutionMap z_i -> h_i.

    Each f_i must have its unique maximum-weight monomial equal to z_i.
    """
    assert len(F) == len(Z)
    if not F:
        return SubstitutionMap(0 if not F else F[0].arity, {})
    arity = F[0].arity
    zset = set(Z)
    images = {}
    for f, z in zip(F, Z):
        zterm = tuple(1 if k == z else 0 for k in range(arity))
        c = f.coeff(zterm)
        assert c != 0, "designated variable does not occur linearly"
        wz = w[z]
        for t in f.support():
            if t != zterm:
                assert weighted_degree(t, w) < wz, (
                    "designated variable is not the strict weighted maximum"
                )
        h = Polynomial.monomial(arity, zterm) - f * (1 / c)
        assert not h.contains_var(z)
        images[z] = h
    for _ in range(max_passes):
        dirty = False
        for z in Z:
            h = images[z]
            used = h.variables() & zset
            for u in used:
                h = substitute(h, SubstitutionMap(arity, {u: images[u]}))
                dirty = True
            images[z] = h
        if not dirty:
            return SubstitutionMap(arity, images)
    raise BudgetExceeded("coherentization did not stabilize")


def coherentize_ordered(F, Z, matrix, max_passes=10_000):
    """Like coherentize, but the leading terms are taken under a matrix ordering."""
    assert len(F) == len(Z)
    if not F:
        return SubstitutionMap(0, {})
    arity = F[0].arity
    zset = set(Z)
    images = {}
    for f, z in zip(F, Z):
        zterm = tuple(1 if k == z else 0 for k in range(arity))
        lt, c = leading_term(matrix, f)
        assert lt == zterm, "designated variable is not the leading term"
        h = Polynomial.monomial(arity, zterm) - f * (1 / c)
        assert not h.contains_var(z)
        images[z] = h
    for _ in range(max_passes):
        dirty = False
        for z in Z:
            h = images[z]
            used = h.variables() & zset
            for u in used:
                h = substitute(h, SubstitutionMap(arity, {u: images[u]}))
                dirty = True
            images[z] = h
        if not dirty:
            return SubstitutionMap(arity, images)
    raise BudgetExceeded("coherentization did not stabilize")


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def normal_form(f, basis, matrix, counter=None):
    """Full normal form of f modulo a list of (lt, poly) pairs."""
    result = Polynomial.zero(f.arity)
    work = Polynomial._raw(f.arity, dict(f._m))
    while work:
        lt = max(work.support(), key=matrix.key)
        c = work.coeff(lt)
        for glt, g in basis:
            q = term_div(lt, glt)
            if q is not None:
                if counter is not None:
                    # budget is in term operations, so huge reducers are
                    # charged proportionally to the work they cause
                    counter[0] += len(g._m)
                    if counter[0] > counter[1]:
                        raise BudgetExceeded("reduction budget exhausted")
                work = work - g * Polynomial.monomial(f.arity, q, c)
                break
        else:
            result = result + Polynomial.monomial(f.arity, lt, c)
            work = work - Polynomial.monomial(f.arity, lt, c)
    return result


def groebner_basis(F, matrix, budget=DEFAULT_GB_BUDGET):
    """Reduced Groebner basis (normal selection strategy, criteria 1 and 2)."""
    import heapq

    counter = [0, budget]
    G = []
    for f in F:
        if not f.is_zero():
            g = monic(f, matrix)
            if g not in G:
                G.append(g)
    lts = [leading_term(matrix, g)[0] for g in G]
    pairs = []
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            heapq.heappush(
                pairs, (matrix.key(term_lcm(lts[i], lts[j])), i, j)
            )
    done = set()
    while pairs:
        _, i, j = heapq.heappop(pairs)
        counter[0] += len(G)
        if counter[0] > counter[1]:
            raise BudgetExceeded("reduction budget exhausted")
        done.add((i, j))
        lcm = term_lcm(lts[i], lts[j])
        if lcm == term_mul(lts[i], lts[j]):
            continue  # product criterion: coprime leading terms
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if term_div(lcm, lts[k]) is not None:
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue  # chain criterion
        arity = G[i].arity
        s = G[i] * Polynomial.monomial(arity, term_div(lcm, lts[i])) - G[j] * (
            Polynomial.monomial(arity, term_div(lcm, lts[j]))
        )
        r = normal_form(s, list(zip(lts, G)), matrix, counter)
        if not r.is_zero():
            r = monic(r, matrix)
            G.append(r)
            lts.append(leading_term(matrix, r)[0])
            n = len(G) - 1
            for k in range(n):
                heapq.heappush(
                    pairs, (matrix.key(term_lcm(lts[k], lts[n])), k, n)
                )
    # reduce: drop redundant leading terms, tail-reduce, sort
    keep = []
    for i in sorted(range(len(G)), key=lambda k: matrix.key(lts[k])):
        if not any(term_div(lts[i], lts[j]) is not None for j in keep):
            keep.append(i)
    reduced = []
    for i in keep:
        others = [(lts[j], G[j]) for j in keep if j != i]
        r = normal_form(G[i], others, matrix, counter)
        if not r.is_zero():
            reduced.append(monic(r, matrix))
    reduced.sort(key=lambda g: matrix.key(leading_term(matrix, g)[0]), reverse=True)
    return reduced


def ideal_equal(F, G, matrix, budget=DEFAULT_GB_BUDGET):
    """Whether two generator lists span the same ideal (reduced-GB comparison)."""
    return groebner_basis(F, matrix, budget) == groebner_basis(G, matrix, budget)


def ideal_member(f, F, matrix, budget=DEFAULT_GB_BUDGET):
    """Whether f lies in the ideal generated by F."""
    gb = groebner_basis(F, matrix, budget)
    basis = [(leading_term(matrix, g)[0], g) for g in gb]
    return normal_form(f, basis, matrix, [0, budget]).is_zero()


# ---------------------------------------------------------------------------
# elimination ideals
# ---------------------------------------------------------------------------


def _interreduce_linear(gens):
    """Row-reduce a generator list over its joint monomial support."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    arity = gens[0].arity
    mons = sorted({m for g in gens for m in g.support()}, reverse=True)
    rows = [[g.coeff(m) for m in mons] for g in gens]
    reduced, _ = rref(rows)
    out = []
    for row in reduced:
        mapping = {mons[c]: x for c, x in enumerate(row) if x}
        if mapping:
            out.append(Polynomial(arity, mapping))
    return out


def _span_solve_variable(gens, v):
    """Combination of the generators equal to v plus terms free of v, or None."""
    arity = gens[0].arity
    vterm = tuple(1 if k == v else 0 for k in range(arity))
    rows = sorted(
        {m for g in gens for m in g.support() if m[v]} | {vterm}
    )
    mat = [[g.coeff(m) for g in gens] for m in rows]
    rhs = [1 if m == vterm else 0 for m in rows]
    lam = solve_linear(mat, rhs)
    if lam is None:
        return None
    f = Polynomial.zero(arity)
    for c, g in zip(lam, gens):
        if c:
            f = f + g * c
    return f


def substitution_eliminate(F, elim):
    """Pre-eliminate variables admitting a linear substitution.

    Returns (remaining generators, eliminated variable set).  The elimination
    ideal of F with respect to `elim` is unchanged.  At every step the
    cheapest variable occurring linearly in a single monomial of a generator
    is substituted away and the catalog is linearly interreduced; when no
    such variable remains, a linear combination of generators of the shape
    v + (terms free of v) is searched for instead.
    """
    gens = _interreduce_linear(F)
    elim = set(elim)
    eliminated = set()
    while True:
        occ = {}
        for g in gens:
            for v in g.variables() & (elim - eliminated):
                occ[v] = occ.get(v, 0) + 1
        best = None
        for gi, f in enumerate(gens):
            for v in sorted(f.variables() & (elim - eliminated)):
                vterm = tuple(1 if k == v else 0 for k in range(f.arity))
                if f.coeff(vterm) == 0:
                    continue
                if sum(1 for t in f.support() if t[v]) == 1:
                    cost = (len(f.support()), occ[v], v)
                    if best is None or cost < best[0]:
                        best = (cost, gi, v, vterm)
        if best is not None:
            _, gi, v, vterm = best
            f = gens[gi]
            h = Polynomial.monomial(f.arity, vterm) - f * (1 / f.coeff(vterm))
            gens = [g for gj, g in enumerate(gens) if gj != gi]
        else:
            f = v = None
            for u in sorted(occ):
                f = _span_solve_variable(gens, u)
                if f is not None:
                    v = u
                    break
            if f is None:
                return gens, eliminated
            vterm = tuple(1 if k == v else 0 for k in range(f.arity))
            h = Polynomial.monomial(f.arity, vterm) - f * (1 / f.coeff(vterm))
        sub = SubstitutionMap(f.arity, {v: h})
        gens = [substitute(g, sub) for g in gens]
        gens = _interreduce_linear(gens)
        eliminated.add(v)


def elimination_ideal(F, arity, elim, budget=DEFAULT_GB_BUDGET, presimplify=True):
    """Generators of the elimination ideal I(F) /\\ K[vars outside elim].

    Uses linear substitution preprocessing, then a block ordering Groebner
    basis; output is the (unique) reduced Groebner basis of the elimination
    ideal under degrevlex restricted to the kept variables.
    """
    elim = set(elim)
    gens = [f for f in F if not f.is_zero()]
    if presimplify:
        gens, _ = substitution_eliminate(gens, elim)
    remaining = elim & set().union(*(g.variables() for g in gens)) if gens else set()
    if remaining:
        wrow = [1 if k in elim else 0 for k in range(arity)]
        block = ordering_from_weights([wrow], arity)
        gb = groebner_basis(gens, block, budget)
        gens = [g for g in gb if not (g.variables() & elim)]
    # canonicalize in the kept subring
    return groebner_basis(gens, degrevlex(arity), budget)


# ---------------------------------------------------------------------------
# exact feasibility LP
# ---------------------------------------------------------------------------


def lp_realizable(groups, arity):
    """Find non-negative rational weights w with w.(winner - loser) >= 1 for
    every (winner, losers) group, or None if infeasible.

    Phase-1 simplex with Bland's rule, exact mpq arithmetic.
    """
    rows = []
    for winner, losers in groups:
        for loser in losers:
            a = [wi - li for wi, li in zip(winner, loser)]
            if all(x == 0 for x in a):
                return None  # winner equals a loser: impossible
            rows.append([mpq(x) for x in a])
    if not rows:
        return [mpq(0)] * arity
    m, n = len(rows), arity
    # tableau: [A | -I (surplus) | I (artificial) | b], maximize -sum(artificials)
    width = n + 2 * m + 1
    T = []
    for r in range(m):
        row = rows[r] + [mpq(0)] * (2 * m) + [mpq(1)]
        row[n + r] = mpq(-1)
        row[n + m + r] = mpq(1)
        T.append(row)
    basis = [n + m + r for r in range(m)]
    # objective row for min sum(artificials): reduced costs z_j - c_j
    obj = [mpq(0)] * width
    for r in range(m):
        for c in range(width):
            obj[c] += T[r][c]
    for r in range(m):
        obj[n + m + r] -= 1
    obj[-1] = sum(T[r][-1] for r in range(m))

    def pivot(pr, pc):
        inv = 1 / T[pr][pc]
        T[pr] = [x * inv for x in T[pr]]
        for r in range(m):
            if r != pr and T[r][pc] != 0:
                f = T[r][pc]
                T[r] = [a - f * b for a, b in zip(T[r], T[pr])]
        f = obj[pc]
        if f != 0:
            for c in range(width):
                obj[c] -= f * T[pr][c]
        basis[pr] = pc

    while True:
        pc = next((c for c in range(width - 1) if obj[c] > 0), None)
        if pc is None:
            break
        ratios = [
            (T[r][-1] / T[r][pc], basis[r], r)
            for r in range(m)
            if T[r][pc] > 0
        ]
        if not ratios:
            return None  # unbounded phase-1: cannot happen, guard anyway
        _, _, pr = min(ratios)
        pivot(pr, pc)
    if obj[-1] != 0:
        return None  # infeasible
    w = [mpq(0)] * n
    for r in range(m):
        if basis[r] < n:
            w[basis[r]] = T[r][-1]
    return w
