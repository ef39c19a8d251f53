"""Weight multiplicities and formal characters.

Two independent routes compute dim V(lambda)_mu: the alternating-sum formula
over the Weyl group driven by the vector partition function, and the
Freudenthal recursion over root strings (which needs no group enumeration).
Full characters use the Freudenthal table plus orbit expansion and are
validated against the product dimension formula.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .errors import CapExceeded
from .rootsystem import Weight, RootVector
from .weyl import enumerate_weyl
from .config import DEFAULT_CAPS

__all__ = [
    "partition_function", "weight_multiplicity", "kostant_multiplicity",
    "freudenthal_multiplicity", "character_of", "weyl_dimension", "Character",
    "dominant_weight_table",
]


def partition_function(rs, beta):
    """Number of multisets of positive roots summing to beta.

    beta may be a RootVector, an integer coefficient tuple, or a Weight (in
    which case membership in the root lattice is checked first).  Returns 0
    off the nonnegative cone.
    """
    if isinstance(beta, Weight):
        coords = rs.root_lattice_coords(beta)
        if coords is None:
            return 0
    elif isinstance(beta, RootVector):
        coords = beta.coeffs
    else:
        coords = tuple(int(x) for x in beta)
    if any(c < 0 for c in coords):
        return 0
    return _pf(rs, coords, 0)


def partition_weight_coords(rs, coords):
    """Partition function on integer fundamental coordinates (fast path)."""
    den = rs.inv_den
    root = []
    for row in rs.inv_num:
        v = sum(row[j] * coords[j] for j in range(rs.rank))
        if v % den or v < 0:
            return 0
        root.append(v // den)
    return _pf(rs, tuple(root), 0)


def _pf(rs, coords, k):
    """Ways to express coords using roots k..end of the fixed height-lex order."""
    if not any(coords):
        return 1
    if k >= rs.nroots:
        return 0
    memo = rs._pf_memo
    key = (coords, k)
    hit = memo.get(key)
    if hit is not None:
        return hit
    root = rs.positive_roots[k].coeffs
    total = 0
    cur = coords
    while True:
        total += _pf(rs, cur, k + 1)
        nxt = tuple(a - b for a, b in zip(cur, root))
        if any(x < 0 for x in nxt):
            break
        cur = nxt
    memo[key] = total
    return total


def partition_function_bruteforce(rs, beta, bound=None):
    """Independent enumeration oracle for the partition function (small beta)."""
    coords = beta.coeffs if isinstance(beta, RootVector) else tuple(beta)
    if any(c < 0 for c in coords):
        return 0
    roots = [rv.coeffs for rv in rs.positive_roots]
    ranges = []
    for r in roots:
        m = min((coords[i] // r[i] for i in range(len(coords)) if r[i]), default=0)
        ranges.append(range(m + 1))
    count = 0
    for combo in iproduct(*ranges):
        tot = [0] * len(coords)
        for c, r in zip(combo, roots):
            for i, x in enumerate(r):
                tot[i] += c * x
        if tuple(tot) == coords:
            count += 1
    return count


def weyl_dimension(rs, lam):
    """Product formula for dim V(lambda)."""
    _require_dominant_integral(lam)
    num = Fraction(1)
    rho = rs.rho
    for k in range(rs.nroots):
        num *= Fraction(rs.pairing(lam + rho, k), rs.pairing(rho, k))
    assert num.denominator == 1
    return num.numerator


def _require_dominant_integral(lam):
    if not (lam.is_integral and lam.is_dominant):
        raise ValueError(f"weight {lam} must be dominant integral")


@lru_cache(maxsize=None)
def _dominant_table(rs_id, lam_coords):
    """dict dominant-weight-coords -> multiplicity in V(lam), via Freudenthal."""
    rs = _RS_REGISTRY[rs_id]
    lam = Weight(lam_coords)
    rank = rs.rank
    # candidate dominant weights mu = lam - sum c_i alpha_i, c in an integer box
    bounds = []
    lam_root = rs.weight_to_root_coords(lam)
    for i in range(rank):
        b = lam_root[i]
        bounds.append(int(b) if isinstance(b, int) else int(b))
    cands = []
    for c in iproduct(*(range(b + 1) for b in bounds)):
        mu = Weight(tuple(lam[i] - sum(rs.cartan[i][j] * c[j] for j in range(rank))
                          for i in range(rank)))
        if mu.is_dominant:
            cands.append((sum(c), mu))
    cands.sort(key=lambda t: (t[0], t[1].coords))
    rho = rs.rho
    norm_top = rs.inner(lam + rho, lam + rho)
    table = {}
    for depth, mu in cands:
        if depth == 0:
            table[mu.coords] = 1
            continue
        acc = Fraction(0)
        for k in range(rs.nroots):
            alpha_w = Weight(rs.root_weight_coords[k])
            j = 1
            while True:
                nu = mu + j * alpha_w
                m = table.get(rs.dominant_in_orbit(nu).coords, 0)
                if m == 0:
                    break
                acc += m * rs.inner(nu, alpha_w)
                j += 1
        denom = norm_top - rs.inner(mu + rho, mu + rho)
        val = 2 * acc / denom
        assert val.denominator == 1 and val >= 0
        table[mu.coords] = int(val)
    return table


_RS_REGISTRY = {}


def dominant_weight_table(rs, lam):
    """Multiplicities of V(lambda) on dominant weights (Freudenthal)."""
    _require_dominant_integral(lam)
    _RS_REGISTRY[rs.label] = rs
    return _dominant_table(rs.label, lam.coords)


def _dominant_candidates(rs, lam):
    """Integer boxes c with lam - sum c_i alpha_i dominant."""
    rank = rs.rank
    lam_root = rs.weight_to_root_coords(lam)
    bounds = [int(b) for b in lam_root]
    cands = []
    for c in iproduct(*(range(b + 1) for b in bounds)):
        mu = tuple(lam[i] - sum(rs.cartan[i][j] * c[j] for j in range(rank))
                   for i in range(rank))
        if all(x >= 0 for x in mu):
            cands.append(mu)
    return cands


@lru_cache(maxsize=None)
def _dominant_table_fast(rs_id, lam_coords):
    """Same table as the Freudenthal route, via the alternating sum over the
    Weyl group; much faster for thin high weights.  Only used when the group
    is enumerable; cross-checked against Freudenthal in the test suite and by
    the total-dimension audit on every character."""
    rs = _RS_REGISTRY[rs_id]
    lam = Weight(lam_coords)
    rho = rs.rho
    shifted = [(w.sign, (w.apply(lam + rho)).coords) for w in enumerate_weyl(rs)]
    rho_c = rho.coords
    table = {}
    for mu in _dominant_candidates(rs, lam):
        total = 0
        for sgn, top in shifted:
            arg = tuple(t - m - r for t, m, r in zip(top, mu, rho_c))
            total += sgn * partition_weight_coords(rs, arg)
        if total:
            table[mu] = total
    return table


def freudenthal_multiplicity(rs, lam, mu):
    """dim V(lambda)_mu by the Freudenthal recursion; no Weyl enumeration."""
    _require_dominant_integral(lam)
    if not mu.is_integral:
        return 0
    if rs.root_lattice_coords(lam - mu) is None:
        return 0
    dom = rs.dominant_in_orbit(mu)
    return dominant_weight_table(rs, lam).get(dom.coords, 0)


def kostant_multiplicity(rs, lam, mu, max_weyl=None):
    """dim V(lambda)_mu as the signed partition-function sum over W."""
    _require_dominant_integral(lam)
    if not mu.is_integral or rs.root_lattice_coords(lam - mu) is None:
        return 0
    rho = rs.rho
    target = mu + rho
    total = 0
    for w in enumerate_weyl(rs, max_weyl):
        arg = w.apply(lam + rho) - target
        total += w.sign * partition_function(rs, arg)
    assert total >= 0
    return total


def weight_multiplicity(rs, lam, mu, max_weyl=None):
    """dim V(lambda)_mu.  Uses the alternating-sum formula while the Weyl
    group is enumerable, falling back to Freudenthal past the cap."""
    cap = DEFAULT_CAPS.max_weyl if max_weyl is None else max_weyl
    if rs.weyl_group_order <= cap:
        return kostant_multiplicity(rs, lam, mu, cap)
    return freudenthal_multiplicity(rs, lam, mu)


@dataclass
class Character:
    """Finite weight -> multiplicity map.

    kind is "formal" for the full character of one module (W-invariant) or
    "decomposition" for highest weights with multiplicities (dominant support).
    """

    entries: dict
    kind: str = "formal"
    highest: tuple = field(default=None)

    def mult(self, w):
        key = w.coords if isinstance(w, Weight) else tuple(w)
        return self.entries.get(key, 0)

    def support(self):
        return [Weight(c) for c in sorted(self.entries)]

    def total(self):
        return sum(self.entries.values())

    def to_json(self):
        from .rootsystem import format_weight
        return {format_weight(Weight(k)): v for k, v in sorted(self.entries.items())}


@lru_cache(maxsize=None)
def _character_cached(rs_id, lam_coords, cap):
    rs = _RS_REGISTRY[rs_id]
    lam = Weight(lam_coords)
    dim = weyl_dimension(rs, lam)
    if dim > cap:
        raise CapExceeded(f"dim V({lam}) = {dim} exceeds character cap {cap}")
    if rs.weyl_group_order <= DEFAULT_CAPS.max_weyl:
        table = _dominant_table_fast(rs.label, lam.coords)
    else:
        table = dominant_weight_table(rs, lam)
    entries = {}
    for dom_coords, m in table.items():
        for w in rs.orbit(Weight(dom_coords)):
            entries[w.coords] = m
    total = sum(entries.values())
    if total != dim:
        from .errors import InvariantViolation
        raise InvariantViolation(
            f"character of {lam}: mass {total} != Weyl dimension {dim}")
    return Character(entries, "formal", lam_coords)


def character_of(rs, lam, max_dim=None):
    """Full formal character of V(lambda); sparse, validated against the
    dimension formula."""
    _require_dominant_integral(lam)
    _RS_REGISTRY[rs.label] = rs
    cap = DEFAULT_CAPS.max_char if max_dim is None else max_dim
    return _character_cached(rs.label, lam.coords, cap)
