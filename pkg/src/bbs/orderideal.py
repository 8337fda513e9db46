"""Order ideals of monomials, their borders, and combinatorial structure.

Terms are exponent tuples; the canonical listing sorts by total degree and
then by ascending lexicographic comparison of the exponent tuple, which puts
1 first and, within a degree, the pure power of the last variable first.
"""

from __future__ import annotations

from math import comb

from .polyring import term_deg, term_div, term_mul


def canonical_key(term):
    """Sort key for the canonical listing of terms."""
    return (term_deg(term), term)


def _shift(term, k, delta=1):
    out = list(term)
    out[k] += delta
    return tuple(out)


class NeighborPair:
    """A next-door ('ND') or across-the-rim ('AR') border pair.

    ND: border[j2] = x_k * border[j].
    AR: border[j] = x_k * rim term, border[j2] = x_l * same rim term, j < j2.
    Indices are 0-based positions into the canonical border listing.
    """

    __slots__ = ("kind", "j", "j2", "k", "l", "m")

    def __init__(self, kind, j, j2, k, l=None, m=None):
        self.kind = kind
        self.j = j
        self.j2 = j2
        self.k = k
        self.l = l
        self.m = m

    def __repr__(self):
        if self.kind == "ND":
            return f"ND(j={self.j + 1}, j2={self.j2 + 1}, k={self.k + 1})"
        return (
            f"AR(j={self.j + 1}, j2={self.j2 + 1}, k={self.k + 1},"
            f" l={self.l + 1}, m={self.m + 1})"
        )


class OrderIdeal:
    """A finite order ideal of terms in n variables, canonically listed."""

    __slots__ = ("n", "terms", "_index", "_border", "_border_index")

    def __init__(self, n, terms):
        terms = [tuple(t) for t in terms]
        if not terms:
            raise ValueError("an order ideal must be nonempty")
        seen = set()
        for t in terms:
            if len(t) != n or any(e < 0 for e in t):
                raise ValueError(f"bad term {t} for {n} variables")
            if t in seen:
                raise ValueError(f"duplicate term {t}")
            seen.add(t)
        for t in terms:
            for k in range(n):
                if t[k] > 0:
                    d = _shift(t, k, -1)
                    if d not in seen:
                        raise ValueError(
                            f"not an order ideal: {t} present but divisor {d} missing"
                        )
        self.n = n
        self.terms = tuple(sorted(seen, key=canonical_key))
        self._index = {t: i for i, t in enumerate(self.terms)}
        border = set()
        for t in self.terms:
            for k in range(n):
                u = _shift(t, k)
                if u not in seen:
                    border.add(u)
        self._border = tuple(sorted(border, key=canonical_key))
        self._border_index = {t: j for j, t in enumerate(self._border)}

    # -- basic data ---------------------------------------------------------

    @property
    def mu(self):
        return len(self.terms)

    @property
    def nu(self):
        return len(self._border)

    @property
    def degree(self):
        return term_deg(self.terms[-1])

    def border(self):
        return self._border

    def index(self, term):
        """0-based position of a term of O, or None."""
        return self._index.get(tuple(term))

    def border_index(self, term):
        """0-based position of a border term, or None."""
        return self._border_index.get(tuple(term))

    def __contains__(self, term):
        return tuple(term) in self._index

    def __eq__(self, other):
        return (
            isinstance(other, OrderIdeal)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.terms))

    def __repr__(self):
        return f"OrderIdeal(n={self.n}, mu={self.mu})"

    # -- structure ----------------------------------------------------------

    def rim(self):
        """Terms of O with at least one border neighbor x_k * t."""
        return tuple(
            t
            for t in self.terms
            if any(_shift(t, k) in self._border_index for k in range(self.n))
        )

    def interior(self):
        """Terms of O all of whose variable multiples stay in O."""
        return tuple(
            t
            for t in self.terms
            if all(_shift(t, k) in self._index for k in range(self.n))
        )

    def neighbor_pairs(self):
        """All ND and AR border pairs, canonically ordered."""
        pairs = []
        for j, b in enumerate(self._border):
            for k in range(self.n):
                j2 = self._border_index.get(_shift(b, k))
                if j2 is not None:
                    pairs.append(NeighborPair("ND", j, j2, k))
        for m, t in enumerate(self.terms):
            ups = [
                (k, self._border_index.get(_shift(t, k))) for k in range(self.n)
            ]
            ups = [(k, j) for k, j in ups if j is not None]
            for a in range(len(ups)):
                for b in range(a + 1, len(ups)):
                    (ka, ja), (kb, jb) = ups[a], ups[b]
                    if ja < jb:
                        pairs.append(NeighborPair("AR", ja, jb, ka, kb, m))
                    else:
                        pairs.append(NeighborPair("AR", jb, ja, kb, ka, m))
        return pairs

    def hilbert_function(self):
        """Number of terms of O in each degree 0..deg(O)."""
        counts = [0] * (self.degree + 1)
        for t in self.terms:
            counts[term_deg(t)] += 1
        return counts

    def is_maxdeg(self):
        """Whether every border term has degree at least deg(O)."""
        return term_deg(self._border[0]) >= self.degree

    def is_simplicial(self):
        """Whether O consists of all terms of degree at most deg(O)."""
        return self.mu == comb(self.degree + self.n, self.n)

    # -- planar structure ---------------------------------------------------

    def segments(self):
        """Maximal runs of top-degree terms (planar MaxDeg order ideals)."""
        assert self.n == 2 and self.is_maxdeg()
        d = self.degree
        top = sorted((t for t in self.terms if term_deg(t) == d), key=lambda t: t[0])
        runs = []
        for t in top:
            if runs and runs[-1][-1][0] + 1 == t[0]:
                runs[-1].append(t)
            else:
                runs.append([t])
        return [tuple(r) for r in runs]

    def maxdeg_counts(self):
        """(mu, nu) of a planar MaxDeg order ideal from its segment lengths."""
        d = self.degree
        lengths = [len(s) for s in self.segments()]
        return (d * (d + 1) // 2 + sum(lengths), d + 1 + len(lengths))

    def plateaus_and_legs(self):
        """Plateaus (chains of top border terms) with their x- and y-legs.

        Returns (plateaus, flags); each plateau is a dict with border-index
        lists 'chain', 'xleg', 'yleg'.  Flags report coverage gaps or
        ambiguous leg extensions.
        """
        assert self.n == 2
        border = self._border
        bset = self._border_index
        flags = []

        def has_up(b):
            return _shift(b, 0) in bset or _shift(b, 1) in bset

        tops = [j for j, b in enumerate(border) if not has_up(b)]
        topset = set(tops)
        # chain edge: x*b == y*b'' for tops b, b''
        succ = {}
        pred = {}
        for j in tops:
            nxt = term_div(_shift(border[j], 0), (0, 1))
            if nxt is not None and bset.get(nxt) in topset:
                j2 = bset[nxt]
                succ[j] = j2
                pred[j2] = j
        plateaus = []
        for j in tops:
            if j in pred:
                continue
            chain = [j]
            while chain[-1] in succ:
                chain.append(succ[chain[-1]])
            plateaus.append(chain)

        def extend_leg(start, down_k, across_k):
            """Leg below a plateau endpoint: maximal next-door/across descent."""
            leg = []
            cur = term_div(border[start], tuple(1 if i == down_k else 0 for i in range(2)))
            if cur is None or cur not in bset:
                return leg
            leg.append(bset[cur])
            while True:
                b = border[leg[-1]]
                cand = []
                down = term_div(b, tuple(1 if i == down_k else 0 for i in range(2)))
                if down is not None and down in bset:
                    cand.append(bset[down])
                across = term_div(
                    _shift(b, across_k),
                    tuple(1 if i == down_k else 0 for i in range(2)),
                )
                if across is not None and across in bset:
                    cand.append(bset[across])
                cand = [c for c in cand if c not in leg]
                if not cand:
                    return leg
                if len(cand) > 1:
                    flags.append(
                        f"ambiguous leg extension below border term {leg[-1] + 1}"
                    )
                leg.append(cand[0])

        result = []
        covered = set()
        for chain in plateaus:
            xleg = extend_leg(chain[0], 0, 1)
            yleg = extend_leg(chain[-1], 1, 0)
            covered.update(chain)
            covered.update(xleg)
            covered.update(yleg)
            result.append({"chain": chain, "xleg": xleg, "yleg": yleg})
        for j, b in enumerate(border):
            if j not in covered and not has_up(b):
                flags.append(f"border term {j + 1} not covered by any plateau or leg")
        return result, flags


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def make_box(a, b):
    """The planar box order ideal {x^i y^j : i < a, j < b}."""
    assert a >= 1 and b >= 1
    return OrderIdeal(2, [(i, j) for i in range(a) for j in range(b)])


def make_simplicial(n, d):
    """All terms of degree <= d in n variables."""
    assert n >= 1 and d >= 0

    def gen(rem_vars, rem_deg):
        if rem_vars == 0:
            yield ()
            return
        for e in range(rem_deg + 1):
            for rest in gen(rem_vars - 1, rem_deg - e):
                yield (e,) + rest

    return OrderIdeal(n, list(gen(n, d)))


def simplicial_counts(n, d):
    """Closed-form counts for the simplicial order ideal of degree d."""
    return {
        "mu": comb(d + n, n),
        "nu": comb(d + n, n - 1),
        "o_int": comb(d + n - 1, n),
        "o_rim": comb(d + n - 1, n - 1),
        "c_total": comb(d + n, n) * comb(d + n, n - 1),
        "c_int": comb(d + n - 1, n) * comb(d + n, n - 1),
        "c_rim": comb(d + n - 1, n - 1) * comb(d + n, n - 1),
    }


def partitions(total):
    """All integer partitions of `total` as non-increasing tuples."""
    out = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rem, maxpart), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(total, total, [])
    return out


def from_partition(parts):
    """Planar order ideal whose column heights are the partition entries."""
    terms = [(i, j) for i, h in enumerate(parts) for j in range(h)]
    return OrderIdeal(2, terms)


def enumerate_planar(mu):
    """All planar order ideals with exactly mu terms (canonical order)."""
    return [from_partition(p) for p in partitions(mu)]
