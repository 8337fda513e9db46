"""Border basis schemes: generic multiplication matrices, the natural
quadratic generators, arrow/weight gradings, exposure, and cotangent data."""

from __future__ import annotations

from gmpy2 import mpq

from .orderideal import OrderIdeal
from .polyring import (
    Polynomial,
    SubstitutionMap,
    VarTable,
    rref,
    substitute,
    term_deg,
    term_div,
)


def _unit(n, k):
    return tuple(1 if i == k else 0 for i in range(n))


class BBScheme:
    """The border basis scheme of an order ideal, over variables c_ij."""

    __slots__ = ("o", "mu", "nu", "vt", "_nat", "_comm")

    def __init__(self, o):
        assert isinstance(o, OrderIdeal)
        self.o = o
        self.mu = o.mu
        self.nu = o.nu
        if self.mu < 10 and self.nu < 10:
            names = [
                f"c{i + 1}{j + 1}" for i in range(self.mu) for j in range(self.nu)
            ]
        else:
            names = [
                f"c{i + 1}_{j + 1}" for i in range(self.mu) for j in range(self.nu)
            ]
        self.vt = VarTable(names)
        self._nat = None
        self._comm = None

    # -- variables ----------------------------------------------------------

    @property
    def arity(self):
        return self.mu * self.nu

    def cidx(self, i, j):
        """0-based flat index of c_{i+1,j+1}."""
        assert 0 <= i < self.mu and 0 <= j < self.nu
        return i * self.nu + j

    def cpair(self, idx):
        """(i, j) 0-based from a flat variable index."""
        return divmod(idx, self.nu)

    def cname(self, idx):
        return self.vt.names[idx]

    def cvar(self, i, j):
        return Polynomial.variable(self.arity, self.cidx(i, j))

    def _cmono(self, pairs, coeff=1):
        t = [0] * self.arity
        for i, j in pairs:
            t[self.cidx(i, j)] += 1
        return Polynomial.monomial(self.arity, tuple(t), coeff)

    # -- gradings -----------------------------------------------------------

    def arrow_degree(self, idx):
        """deg_A(c_ij) = log(b_j) - log(t_i) as an integer vector."""
        i, j = self.cpair(idx)
        b = self.o.border()[j]
        t = self.o.terms[i]
        return tuple(be - te for be, te in zip(b, t))

    def weight_degree(self, idx):
        """deg_W(c_ij) = deg(b_j) - deg(t_i)."""
        return sum(self.arrow_degree(idx))

    def arrow_grading(self):
        """(list of arrow degrees, list of weight degrees), by flat index."""
        degs = [self.arrow_degree(k) for k in range(self.arity)]
        return degs, [sum(d) for d in degs]

    def poly_arrow_degree(self, f):
        """Common arrow degree of a nonzero arrow-homogeneous polynomial."""
        degs = set()
        for t in f.support():
            total = (0,) * self.o.n
            for k, e in enumerate(t):
                if e:
                    d = self.arrow_degree(k)
                    total = tuple(a + e * b for a, b in zip(total, d))
            degs.add(total)
        assert len(degs) == 1, "polynomial is not arrow-homogeneous"
        return degs.pop()

    def c0_census(self):
        """Variables of weight degree zero (requires a MaxDeg order ideal)."""
        assert self.o.is_maxdeg(), "C0 census requires a MaxDeg order ideal"
        return [k for k in range(self.arity) if self.weight_degree(k) == 0]

    # -- multiplication matrices and generators -----------------------------

    def mult_matrix(self, r):
        """Generic multiplication matrix for x_r (0-based), rows/cols over O."""
        n = self.o.n
        A = [
            [Polynomial.zero(self.arity) for _ in range(self.mu)]
            for _ in range(self.mu)
        ]
        for j, t in enumerate(self.o.terms):
            u = tuple(a + b for a, b in zip(t, _unit(n, r)))
            m0 = self.o.index(u)
            if m0 is not None:
                A[m0][j] = Polynomial.constant(self.arity, 1)
            else:
                p = self.o.border_index(u)
                for m in range(self.mu):
                    A[m][j] = self.cvar(m, p)
        return A

    def commutator_generators(self):
        """Entries of all commutators [A_r, A_s], keyed by label."""
        if self._comm is not None:
            return self._comm
        n = self.o.n
        mats = [self.mult_matrix(r) for r in range(n)]
        out = {}
        for r in range(n):
            for s in range(r + 1, n):
                Ar, As = mats[r], mats[s]
                for m in range(self.mu):
                    for j in range(self.mu):
                        e = Polynomial.zero(self.arity)
                        for q in range(self.mu):
                            if Ar[m][q] and As[q][j]:
                                e = e + Ar[m][q] * As[q][j]
                            if As[m][q] and Ar[q][j]:
                                e = e - As[m][q] * Ar[q][j]
                        out[("COMM", r + 1, s + 1, m + 1, j + 1)] = e
        self._comm = out
        return out

    def natural_generators(self):
        """The ND/AR generator catalog, keyed by label ('ND'|'AR', j, j2, m)."""
        if self._nat is not None:
            return self._nat
        o = self.o
        n = o.n
        out = {}
        for pair in o.neighbor_pairs():
            if pair.kind == "ND":
                j, j2, k = pair.j, pair.j2, pair.k
                for m in range(self.mu):
                    p = self.cvar(m, j2)
                    tm = o.terms[m]
                    if tm[k] > 0:
                        mdown = o.index(term_div(tm, _unit(n, k)))
                        if mdown is not None:
                            p = p - self.cvar(mdown, j)
                    for i, ti in enumerate(o.terms):
                        q = o.border_index(
                            tuple(a + b for a, b in zip(ti, _unit(n, k)))
                        )
                        if q is not None:
                            p = p - self._cmono([(i, j), (m, q)])
                    out[("ND", j + 1, j2 + 1, m + 1)] = p
            else:
                j, j2, k, l = pair.j, pair.j2, pair.k, pair.l
                # b_j = x_k t_r, b_j2 = x_l t_r; generator x_l g_j - x_k g_j2
                for m in range(self.mu):
                    p = Polynomial.zero(self.arity)
                    tm = o.terms[m]
                    i1 = o.index(term_div(tm, _unit(n, l))) if tm[l] else None
                    if i1 is not None:
                        p = p - self.cvar(i1, j)
                    i2 = o.index(term_div(tm, _unit(n, k))) if tm[k] else None
                    if i2 is not None:
                        p = p + self.cvar(i2, j2)
                    for i, ti in enumerate(o.terms):
                        q = o.border_index(
                            tuple(a + b for a, b in zip(ti, _unit(n, l)))
                        )
                        if q is not None:
                            p = p - self._cmono([(i, j), (m, q)])
                        q = o.border_index(
                            tuple(a + b for a, b in zip(ti, _unit(n, k)))
                        )
                        if q is not None:
                            p = p + self._cmono([(i, j2), (m, q)])
                    out[("AR", j + 1, j2 + 1, m + 1)] = p
        self._nat = out
        return out

    # -- homogeneous / filtered / fiber variants ----------------------------

    def positive_part_substitution(self):
        """Substitution sending every variable of positive weight degree to 0."""
        zero = Polynomial.zero(self.arity)
        return SubstitutionMap(
            self.arity,
            {k: zero for k in range(self.arity) if self.weight_degree(k) > 0},
        )

    def homogeneous_matrices(self):
        """Multiplication matrices with positive-weight variables set to 0."""
        sub = self.positive_part_substitution()
        mats = []
        for r in range(self.o.n):
            A = self.mult_matrix(r)
            mats.append([[substitute(e, sub) for e in row] for row in A])
        return mats

    def matrices_commute(self, mats):
        """Whether all the given polynomial matrices pairwise commute."""
        for r in range(len(mats)):
            for s in range(r + 1, len(mats)):
                for m in range(self.mu):
                    for j in range(self.mu):
                        e = Polynomial.zero(self.arity)
                        for q in range(self.mu):
                            e = e + mats[r][m][q] * mats[s][q][j]
                            e = e - mats[s][m][q] * mats[r][q][j]
                        if not e.is_zero():
                            return False
        return True

    def degree_filtered_catalog(self):
        """Natural generators plus all negative-weight variables as generators."""
        out = dict(self.natural_generators())
        for k in range(self.arity):
            if self.weight_degree(k) < 0:
                i, j = self.cpair(k)
                out[("DF", i + 1, j + 1)] = Polynomial.variable(self.arity, k)
        return out

    def c0_elimination(self):
        """Generators of the degree-filtered ideal intersected with K[C0].

        The catalog is weight-homogeneous, the negative-weight variables are
        themselves generators (so they can be substituted to zero exactly),
        and afterwards every variable has non-negative weight with C0 the
        weight-zero ones.  The weight-zero component of the ideal is then the
        K[C0]-span of the weight-zero generators, which is the intersection.
        """
        cat = [g for g in self.degree_filtered_catalog().values() if g]
        zero = Polynomial.zero(self.arity)
        sub = SubstitutionMap(
            self.arity,
            {k: zero for k in range(self.arity) if self.weight_degree(k) < 0},
        )
        out = []
        for g in cat:
            g = substitute(g, sub)
            if g and all(
                self.weight_degree(v) == 0 for v in g.variables()
            ):
                out.append(g)
        return out

    def fiber_catalog(self, gamma):
        """Catalog with the weight-zero variables specialized to constants.

        gamma maps flat C0 indices to rationals; unspecified C0 variables are
        sent to 0.  Requires a MaxDeg order ideal.
        """
        c0 = self.c0_census()
        images = {
            k: Polynomial.constant(self.arity, gamma.get(k, mpq(0))) for k in c0
        }
        sub = SubstitutionMap(self.arity, images)
        return {
            lab: substitute(g, sub) for lab, g in self.natural_generators().items()
        }

    # -- exposure -----------------------------------------------------------

    def exposure(self):
        """Exposed variables: {flat index: list of (direction, kind, partner)}.

        c_ij is x_l-exposed when x_l * t_i is a border term and the column's
        border term b_j sits in a next-door pair (x_l b_j in the border) or an
        across-the-street pair (x_l b_j / x_k in the border for some k != l).
        """
        o = self.o
        n = o.n
        out = {}
        for idx in range(self.arity):
            i, j = self.cpair(idx)
            ti = o.terms[i]
            bj = o.border()[j]
            wits = []
            for l in range(n):
                up = tuple(a + b for a, b in zip(ti, _unit(n, l)))
                if o.border_index(up) is None:
                    continue
                xlb = tuple(a + b for a, b in zip(bj, _unit(n, l)))
                j2 = o.border_index(xlb)
                if j2 is not None:
                    wits.append((l, "ND", j2))
                    continue
                found = None
                for k in range(n):
                    if k == l:
                        continue
                    other = term_div(xlb, _unit(n, k))
                    if other is not None:
                        j2 = o.border_index(other)
                        if j2 is not None:
                            found = (l, "AR", j2)
                            break
                if found:
                    wits.append(found)
            if wits:
                out[idx] = wits
        return out

    # -- cotangent space ----------------------------------------------------

    def linear_part(self, f):
        """Degree-1 component of a polynomial."""
        return Polynomial(
            self.arity, {t: c for t, c in f.items() if term_deg(t) == 1}
        )

    def cotangent(self):
        """Cotangent data at the monomial point: E0, classes, basic variables.

        Returns a dict with keys 'E0' (variables with zero residue),
        'classes' (proper residue classes with >= 2 members), 'singletons',
        'basic' (variables absent from every linear part), and 'dim'.
        """
        catalog = self.natural_generators()
        linvecs = []
        for g in catalog.values():
            lp = self.linear_part(g)
            if not lp.is_zero():
                vec = [mpq(0)] * self.arity
                for t, c in lp.items():
                    vec[next(k for k, e in enumerate(t) if e)] = c
                linvecs.append(vec)
        rows, pivots = rref(linvecs) if linvecs else ([], [])
        pivset = dict(zip(pivots, range(len(pivots))))
        occurring = set()
        for vec in linvecs:
            occurring.update(k for k, x in enumerate(vec) if x != 0)

        def residue(v):
            """e_v reduced modulo the row space, as a tuple."""
            if v in pivset:
                row = rows[pivset[v]]
                out = [-x for x in row]
                out[v] = mpq(0)
                return tuple(out)
            e = [mpq(0)] * self.arity
            e[v] = mpq(1)
            return tuple(e)

        res = {v: residue(v) for v in range(self.arity)}
        e0 = sorted(v for v, r in res.items() if all(x == 0 for x in r))
        groups = {}
        for v in range(self.arity):
            r = res[v]
            if all(x == 0 for x in r):
                continue
            lead = next(x for x in r if x != 0)
            normed = tuple(x / lead for x in r)
            groups.setdefault(normed, []).append(v)
        classes = sorted(
            (sorted(g) for g in groups.values() if len(g) > 1),
            key=lambda g: g[0],
        )
        singles = sorted(
            g[0] for g in groups.values() if len(g) == 1
        )
        return {
            "E0": e0,
            "classes": classes,
            "singletons": singles,
            "basic": sorted(set(range(self.arity)) - occurring),
            "dim": self.arity - len(rows),
        }
