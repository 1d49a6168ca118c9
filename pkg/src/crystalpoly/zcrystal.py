"""Crystal operators on the semi-infinite lattice Z^infinity.

Vectors x = (..., x_k, ..., x_2, x_1) with finitely many nonzero entries
are indexed by flat positions k = 1, 2, ... read right-to-left, or
equivalently by (row j, column i) with k = (j-1)*n + i: the reduction
word iota repeats the columns n, ..., 2, 1 cyclically, so position k
carries colour i_k = ((k-1) mod n) + 1.

The Kashiwara operators act through the local exponents

    sigma_k(x) = x_k + sum_{l > k} a_{i_k, i_l} x_l,

with f_i adding 1 at the first maximizer of sigma over colour-i positions
and e_i subtracting 1 at the last one (when the max is positive).  This
realizes B(infinity); pairing with a highest-weight marker realizes
B(lambda) inside the same lattice via the tensor-product rule.
"""

import os


class IotaSequence:
    """The cyclic word (..., n, ..., 2, 1) with row/column bookkeeping."""

    def __init__(self, cartan):
        self.cartan = cartan
        self.rank = cartan.rank

    def node(self, k):
        """Colour i_k of flat position k >= 1."""
        return (k - 1) % self.rank + 1

    def flat(self, j, i):
        """Flat position of row j >= 1, column 1 <= i <= rank."""
        return (j - 1) * self.rank + i

    def rowcol(self, k):
        j, i0 = divmod(k - 1, self.rank)
        return (j + 1, i0 + 1)

    def kplus(self, k):
        """Next position of the same colour."""
        return k + self.rank

    def kminus(self, k):
        """Previous position of the same colour, 0 if there is none."""
        return k - self.rank if k > self.rank else 0


class ZVector:
    """Immutable finitely-supported integer vector on (row, column) slots."""

    __slots__ = ("entries", "_key")

    def __init__(self, entries=()):
        d = dict(entries)
        self.entries = {k: v for k, v in d.items() if v != 0}
        self._key = tuple(sorted(self.entries.items()))

    def get(self, j, i):
        return self.entries.get((j, i), 0)

    def bump(self, j, i, delta):
        d = dict(self.entries)
        d[(j, i)] = d.get((j, i), 0) + delta
        return ZVector(d)

    def max_row(self):
        return max((j for j, _ in self.entries), default=0)

    def total(self):
        return sum(self.entries.values())

    def column_sums(self, rank):
        sums = [0] * rank
        for (_, i), v in self.entries.items():
            sums[i - 1] += v
        return tuple(sums)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return isinstance(other, ZVector) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if not self.entries:
            return "ZVector(0)"
        body = ", ".join("(%d;%d):%d" % (j, i, v) for (j, i), v in self._key)
        return "ZVector(%s)" % body


def sigma(iota, x, k):
    """sigma_k(x) = x_k + sum over later positions l of a_{i_k,i_l} x_l."""
    j, i = iota.rowcol(k)
    s = x.get(j, i)
    a = iota.cartan.a
    for (jl, il), v in x.entries.items():
        if iota.flat(jl, il) > k:
            s += a(i, il) * v
    return s


def sigma_i_max(iota, x, i):
    """Max of sigma over colour-i positions, with first/last maximizers.

    Returns (sig, k_first, k_last).  Scanning rows 1..R+1 (R = top support
    row) suffices: beyond that every sigma_k is 0, so the returned max is
    >= 0 and k_first is correct even when f_i must open a new row.
    """
    rows = x.max_row() + 1
    a = iota.cartan.a
    # suffix-scan the support once, from the far end toward position 0
    support = sorted(((iota.flat(j, i2), i2, v)
                      for (j, i2), v in x.entries.items()), reverse=True)
    best = None
    k_first = k_last = 0
    acc = 0          # sum of a_{i, i_l} x_l over support positions l > k
    si = 0
    for j in range(rows, 0, -1):
        k = iota.flat(j, i)
        while si < len(support) and support[si][0] > k:
            acc += a(i, support[si][1]) * support[si][2]
            si += 1
        val = x.get(j, i) + acc
        if best is None or val > best:
            best = val
            k_first = k_last = k
        elif val == best:
            k_first = k      # scanning downward in k
    # row R+1 contributes sigma = 0, and all later rows repeat it, so
    # best >= 0 and the maximizers over the scanned rows are global ones.
    return best, k_first, k_last


def f_tilde(iota, x, i):
    """Kashiwara lowering operator on B(infinity): always defined."""
    _, k_first, _ = sigma_i_max(iota, x, i)
    j, i2 = iota.rowcol(k_first)
    return x.bump(j, i2, +1)


def e_tilde(iota, x, i):
    """Kashiwara raising operator on B(infinity); None at the top."""
    sig, _, k_last = sigma_i_max(iota, x, i)
    if sig <= 0:
        return None
    j, i2 = iota.rowcol(k_last)
    assert x.get(j, i2) >= 1, "raising at an empty slot: not a crystal point"
    return x.bump(j, i2, -1)


def weight_root_coords(x, rank):
    """wt(x) = -sum x_{j;p} alpha_p, as coefficients over the simple roots."""
    return tuple(-v for v in x.column_sums(rank))


def weight_pairing(iota, x, i, lam=None):
    """<h_i, wt> where wt = wt(x) for B(infinity), lam + wt(x) for B(lam)."""
    base = iota.cartan.pair_root_coords(i, weight_root_coords(x, iota.rank))
    if lam is not None:
        base += lam[i - 1]
    return base


def epsilon(iota, x, i):
    sig, _, _ = sigma_i_max(iota, x, i)
    return sig


def phi(iota, x, i):
    return epsilon(iota, x, i) + weight_pairing(iota, x, i)


class CrystalNode:
    """An element of B(infinity) (lam=None) or of B(lam), as x (x) r_lam.

    The tensor rule against the one-point crystal {r_lam} with
    eps_i = -<h_i, lam>, phi_i = 0 gives:
      eps_i(node) = max(eps_i(x), -<h_i, lam + wt x>)
      phi_i(node) = max(0, phi_i(x) + <h_i, lam>)
      f_i acts on x iff phi_i(x) + <h_i, lam> > 0, else kills the node;
      e_i acts on x iff phi_i(x) + <h_i, lam> >= 0, else kills the node.
    """

    __slots__ = ("iota", "vector", "lam")

    def __init__(self, iota, vector=None, lam=None):
        self.iota = iota
        self.vector = vector if vector is not None else ZVector()
        self.lam = tuple(lam) if lam is not None else None

    def weight_pairing(self, i):
        return weight_pairing(self.iota, self.vector, i, self.lam)

    def epsilon(self, i):
        e = epsilon(self.iota, self.vector, i)
        if self.lam is None:
            return e
        return max(e, -self.weight_pairing(i))

    def phi(self, i):
        if self.lam is None:
            return phi(self.iota, self.vector, i)
        return max(0, phi(self.iota, self.vector, i) + self.lam[i - 1])

    def f(self, i):
        if self.lam is not None:
            if phi(self.iota, self.vector, i) + self.lam[i - 1] <= 0:
                return None
        return CrystalNode(self.iota, f_tilde(self.iota, self.vector, i),
                           self.lam)

    def e(self, i):
        if self.lam is not None:
            if phi(self.iota, self.vector, i) + self.lam[i - 1] < 0:
                return None
        y = e_tilde(self.iota, self.vector, i)
        return None if y is None else CrystalNode(self.iota, y, self.lam)

    def __eq__(self, other):
        return (isinstance(other, CrystalNode)
                and self.vector == other.vector and self.lam == other.lam)

    def __hash__(self):
        return hash((self.vector, self.lam))

    def __repr__(self):
        tag = "" if self.lam is None else ", lam=%s" % (self.lam,)
        return "CrystalNode(%r%s)" % (self.vector, tag)


def _bfs_cap():
    return int(os.environ.get("CRYSTALPOLY_BFS_CAP", "1000000"))


def generate_binf(iota, depth):
    """All B(infinity) vectors reachable by at most `depth` lowering steps."""
    seen = {ZVector()}
    frontier = [ZVector()]
    for _ in range(depth):
        nxt = []
        for x in frontier:
            for i in range(1, iota.rank + 1):
                y = f_tilde(iota, x, i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
            if len(seen) > _bfs_cap():
                raise RuntimeError("B(infinity) truncation exceeds cap")
        frontier = nxt
    return seen


def generate_blambda(iota, lam):
    """All vectors x with x (x) r_lam in B(lam), from the highest node."""
    from .rootdata import check_dominant
    lam = check_dominant(iota.cartan, lam)
    top = CrystalNode(iota, ZVector(), lam)
    seen = {top.vector}
    frontier = [top]
    while frontier:
        nxt = []
        for node in frontier:
            for i in range(1, iota.rank + 1):
                child = node.f(i)
                if child is not None and child.vector not in seen:
                    seen.add(child.vector)
                    nxt.append(child)
            if len(seen) > _bfs_cap():
                raise RuntimeError("B(lambda) generation exceeds cap")
        frontier = nxt
    return seen
