"""Root systems of the finite simple types A-G, with exact coordinates.

Conventions used throughout the package:

* a weight is stored in the fundamental-weight basis, coordinate i being the
  pairing lambda(h_i) with the i-th simple coroot;
* a root is stored in the simple-root basis with integer coefficients;
* the invariant bilinear form is normalised so short roots have squared
  length 2; everything is exact (ints, else ``fractions.Fraction``).

The Cartan matrix convention is ``cartan[i][j] = alpha_j(h_i)``, so the
fundamental coordinates of alpha_j are the j-th column.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import mat_inv

__all__ = [
    "Weight", "RootVector", "RootSystem", "build_root_system",
    "weyl_order", "parse_weight", "format_weight", "dominance_hull_equiv",
]


def _num(x):
    """Normalise an exact scalar: Fraction with denominator 1 becomes int."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


@dataclass(frozen=True, slots=True)
class Weight:
    """Vector of exact rationals in the fundamental-weight basis."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_num(c) for c in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords))

    def __rmul__(self, scalar):
        return Weight(tuple(_num(scalar * a) for a in self.coords))

    @property
    def is_integral(self):
        return all(isinstance(c, int) for c in self.coords)

    @property
    def is_dominant(self):
        return all(c >= 0 for c in self.coords)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __str__(self):
        return format_weight(self)


@dataclass(frozen=True, slots=True)
class RootVector:
    """Integer vector in the simple-root basis."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other):
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RootVector(tuple(-a for a in self.coeffs))

    @property
    def height(self):
        return sum(self.coeffs)

    @property
    def is_positive(self):
        return any(self.coeffs) and all(c >= 0 for c in self.coeffs)


def parse_weight(text, rank=None):
    """Parse 'a,b,...' with entries 'p/q' into a Weight."""
    parts = [p.strip() for p in str(text).split(",")]
    coords = []
    for p in parts:
        try:
            coords.append(_num(Fraction(p)))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad weight coordinate {p!r}") from exc
    if rank is not None and len(coords) != rank:
        raise ValueError(f"expected {rank} coordinates, got {len(coords)}")
    return Weight(tuple(coords))


def format_weight(w):
    return ",".join(str(c) for c in w.coords)


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def weyl_order(series, rank):
    """Order of the Weyl group, from the classical formulas."""
    if series == "A":
        return math.factorial(rank + 1)
    if series in ("B", "C"):
        return (1 << rank) * math.factorial(rank)
    if series == "D":
        return (1 << (rank - 1)) * math.factorial(rank)
    if series == "G":
        return 12
    if series == "F":
        return 1152
    if series == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    raise ValueError(f"unknown series {series!r}")


def _cartan_matrix(series, rank):
    a = [[2 * int(i == j) for j in range(rank)] for i in range(rank)]

    def chain(upto):
        for i in range(upto):
            a[i][i + 1] = -1
            a[i + 1][i] = -1

    if series == "A":
        chain(rank - 1)
    elif series == "B":
        chain(rank - 2)
        a[rank - 2][rank - 1] = -1   # last root short
        a[rank - 1][rank - 2] = -2
    elif series == "C":
        chain(rank - 2)
        a[rank - 2][rank - 1] = -2   # last root long
        a[rank - 1][rank - 2] = -1
    elif series == "D":
        chain(rank - 2)
        a[rank - 3][rank - 1] = -1
        a[rank - 1][rank - 3] = -1
    elif series == "E":
        chain(rank - 2)
        a[rank - 4][rank - 1] = -1
        a[rank - 1][rank - 4] = -1
    elif series == "F":
        chain(3)
        a[1][2] = -1
        a[2][1] = -2
    elif series == "G":
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizers(cartan):
    """Integers d_i with d_i A[i][j] = d_j A[j][i], minimum 1.

    Then (alpha_i, alpha_j) = d_i A[i][j] and (alpha_i, alpha_i) = 2 d_i.
    """
    rank = len(cartan)
    d = [None] * rank
    d[0] = Fraction(1)
    # propagate along the (connected) Dynkin graph
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            if d[i] is None:
                continue
            for j in range(rank):
                if cartan[i][j] != 0 and i != j and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    changed = True
    if any(x is None for x in d):
        raise ValueError("disconnected Cartan matrix")
    lo = min(d)
    d = [x / lo for x in d]
    assert all(x.denominator == 1 for x in d)
    return tuple(int(x) for x in d)


class RootSystem:
    """Immutable structural data of one simple type.

    Use :func:`build_root_system`; instances are interned so identity
    comparison and id-keyed caches are safe.
    """

    def __init__(self, series, rank):
        if series not in _VALID_RANKS:
            raise ValueError(f"unknown series {series!r}")
        if not _VALID_RANKS[series](rank):
            raise ValueError(f"rank {rank} invalid for series {series}")
        self.series = series
        self.rank = rank
        self.label = f"{series}{rank}"
        self.cartan = _cartan_matrix(series, rank)
        self.sym = _symmetrizers(self.cartan)
        self._build_roots()
        self._build_form()
        self.rho = Weight((1,) * rank)
        self._check_invariants()
        self._pf_memo = {}

    # -- construction -----------------------------------------------------

    def _build_roots(self):
        rank = self.rank
        simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            fresh = []
            for c in frontier:
                pair = [sum(self.cartan[i][j] * c[j] for j in range(rank))
                        for i in range(rank)]
                for i in range(rank):
                    img = list(c)
                    img[i] -= pair[i]
                    img = tuple(img)
                    if img not in seen and all(x >= 0 for x in img) and any(img):
                        seen.add(img)
                        fresh.append(img)
            frontier = fresh
        roots = sorted(seen, key=lambda c: (sum(c), c))
        self.positive_roots = tuple(RootVector(c) for c in roots)
        self.nroots = len(roots)
        self.root_index = {rv.coeffs: k for k, rv in enumerate(self.positive_roots)}
        # fundamental coordinates of each positive root (column combination)
        self.root_weight_coords = tuple(
            tuple(sum(self.cartan[i][j] * rv.coeffs[j] for j in range(rank))
                  for i in range(rank))
            for rv in self.positive_roots)

    def _build_form(self):
        rank = self.rank
        # (alpha_i, alpha_j) = d_i A[i][j]; fundamental-weight Gram matrix F
        # satisfies F * C = diag(d) with C[i][j] = A[i][j].
        c_inv = mat_inv([list(row) for row in self.cartan])
        self.inv_cartan = tuple(tuple(_num(x) for x in row) for row in c_inv)
        inv_den = 1
        for row in c_inv:
            for x in row:
                inv_den = inv_den * x.denominator // math.gcd(inv_den, x.denominator)
        self.inv_den = inv_den
        self.inv_num = tuple(tuple(int(x * inv_den) for x in row) for row in c_inv)
        # F * A = diag(d) with (w_i, alpha_j) = delta_ij d_j, so F = diag(d) A^{-1}
        form = [[_num(self.sym[i] * c_inv[i][j]) for j in range(rank)]
                for i in range(rank)]
        self.form = tuple(tuple(row) for row in form)
        den = 1
        for row in form:
            for x in row:
                if isinstance(x, Fraction):
                    den = den * x.denominator // math.gcd(den, x.denominator)
        self.form_den = den
        self.form_num = tuple(tuple(int(x * den) for x in row) for row in form)
        # squared length 2*d_alpha and integer coroot coordinates per root
        norms = []
        coroots = []
        for rv in self.positive_roots:
            c = rv.coeffs
            n = sum(self.sym[i] * self.cartan[i][j] * c[i] * c[j]
                    for i in range(rank) for j in range(rank))
            d_alpha = Fraction(n, 2)
            cv = tuple(_num(Fraction(c[i] * self.sym[i]) / d_alpha) for i in range(rank))
            assert all(isinstance(x, int) for x in cv)
            norms.append(_num(n))
            coroots.append(cv)
        self.root_norms = tuple(norms)
        self.coroots = tuple(coroots)

    def _check_invariants(self):
        a = self.cartan
        for i in range(self.rank):
            if a[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(self.rank):
                if i != j and a[i][j] > 0:
                    raise ValueError("Cartan off-diagonal must be <= 0")
        # finite type: leading principal minors positive
        for k in range(1, self.rank + 1):
            if _minor([list(r[:k]) for r in a[:k]]) <= 0:
                raise ValueError("Cartan matrix not of finite type")
        if min(self.root_norms) != 2:
            raise ValueError("short-root normalisation broken")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.form[i][j] != self.form[j][i]:
                    raise ValueError("invariant form not symmetric")
        for k in range(1, self.rank + 1):
            if _minor([[Fraction(self.form[i][j]) for j in range(k)]
                       for i in range(k)]) <= 0:
                raise ValueError("invariant form not positive definite")
        # closure under simple reflections
        for rv in self.positive_roots:
            for i in range(self.rank):
                img = self.reflect_root(i, rv)
                key = img.coeffs if img.is_positive else (-img).coeffs
                if key not in self.root_index:
                    raise ValueError("positive roots not reflection-closed")

    # -- bookkeeping -------------------------------------------------------

    def __repr__(self):
        return f"RootSystem({self.label})"

    def __reduce__(self):
        return (build_root_system, (self.label,))

    @property
    def weyl_group_order(self):
        return weyl_order(self.series, self.rank)

    def zero_weight(self):
        return Weight((0,) * self.rank)

    def fundamental(self, i):
        return Weight(tuple(int(i == j) for j in range(self.rank)))

    def simple_root(self, i):
        return RootVector(tuple(int(i == j) for j in range(self.rank)))

    def simple_root_weight(self, i):
        """alpha_i in fundamental coordinates (column i of the Cartan matrix)."""
        return Weight(tuple(self.cartan[j][i] for j in range(self.rank)))

    # -- coordinate algebra --------------------------------------------------

    def root_to_weight(self, rv):
        c = rv.coeffs if isinstance(rv, RootVector) else tuple(rv)
        return Weight(tuple(sum(self.cartan[i][j] * c[j] for j in range(self.rank))
                            for i in range(self.rank)))

    def weight_to_root_coords(self, w):
        """Coordinates of a weight in the simple-root basis (exact rationals)."""
        return tuple(_num(sum(Fraction(self.inv_cartan[i][j]) * w[j]
                              for j in range(self.rank)))
                     for i in range(self.rank))

    def root_lattice_coords(self, w):
        """Integer root coordinates, or None if w is not in the root lattice."""
        coords = w.coords if isinstance(w, Weight) else tuple(w)
        if all(isinstance(x, int) for x in coords):
            den = self.inv_den
            out = []
            for row in self.inv_num:
                v = sum(row[j] * coords[j] for j in range(self.rank))
                if v % den:
                    return None
                out.append(v // den)
            return tuple(out)
        c = self.weight_to_root_coords(w)
        if all(isinstance(x, int) for x in c):
            return c
        return None

    def inner(self, wa, wb):
        """Invariant form on weights, short roots normalised to length^2 = 2."""
        num = 0
        fa, fb = wa.coords, wb.coords
        for i in range(self.rank):
            if fa[i] == 0:
                continue
            row = self.form_num[i]
            num += fa[i] * sum(row[j] * fb[j] for j in range(self.rank))
        return _num(Fraction(num, self.form_den))

    def pairing(self, w, root):
        """w(h_alpha) for a root given as RootVector or root index."""
        cv = self.coroots[root] if isinstance(root, int) \
            else self.coroots[self.root_index[root.coeffs]]
        return _num(sum(cv[i] * w[i] for i in range(self.rank)))

    # -- reflections and orbits ----------------------------------------------

    def reflect(self, i, w):
        """Simple reflection s_i(w) = w - w(h_i) alpha_i on weights."""
        c = w[i]
        if c == 0:
            return w
        return Weight(tuple(w[j] - c * self.cartan[j][i] for j in range(self.rank)))

    def reflect_root(self, i, rv):
        pair = sum(self.cartan[i][j] * rv.coeffs[j] for j in range(self.rank))
        coeffs = list(rv.coeffs)
        coeffs[i] -= pair
        return RootVector(tuple(coeffs))

    def orbit(self, w):
        """Full W-orbit of a weight by closure under simple reflections."""
        seen = {w.coords}
        frontier = [w]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    img = self.reflect(i, v)
                    if img.coords not in seen:
                        seen.add(img.coords)
                        nxt.append(img)
            frontier = nxt
        return [Weight(c) for c in sorted(seen)]

    def dominant_in_orbit(self, w):
        """The unique dominant orbit representative (no group element tracked)."""
        cur = w
        while True:
            i = next((k for k in range(self.rank) if cur[k] < 0), None)
            if i is None:
                return cur
            cur = self.reflect(i, cur)

    def in_dominant_hull(self, lam, mu):
        """mu in conv(W lam), both arguments dominant: lam - mu in Q>=0 Pi."""
        diff = self.weight_to_root_coords(lam - self.dominant_in_orbit(mu))
        return all(x >= 0 for x in diff)


def _minor(m):
    n = len(m)
    m = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


@lru_cache(maxsize=None)
def _interned(series, rank):
    return RootSystem(series, rank)


def build_root_system(spec):
    """Build (or fetch the interned copy of) a root system from 'A2'-style spec."""
    spec = str(spec).strip()
    if len(spec) < 2 or not spec[0].isalpha():
        raise ValueError(f"bad root system spec {spec!r}")
    series = spec[0].upper()
    try:
        rank = int(spec[1:])
    except ValueError as exc:
        raise ValueError(f"bad rank in spec {spec!r}") from exc
    return _interned(series, rank)


def dominance_hull_equiv(rs, lam, mu):
    """(lam - mu in Z>=0 Pi, conv(W mu) subset of conv(W lam)) for dominant
    integral inputs.

    The two tests agree whenever lam - mu lies in the root lattice; the hull
    test alone is insensitive to the lattice coset.
    """
    for w in (lam, mu):
        if not (w.is_integral and w.is_dominant):
            raise ValueError("dominance_hull_equiv needs dominant integral weights")
    diff = rs.weight_to_root_coords(lam - mu)
    dom = all(isinstance(x, int) and x >= 0 for x in diff)
    hull = all(x >= 0 for x in diff)
    return dom, hull
