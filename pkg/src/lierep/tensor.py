"""Tensor product decomposition by four independent algorithms.

* character: convolve formal characters, then peel highest weights;
* steinberg: the signed double sum over the Weyl group through the vector
  partition function;
* klimyk: the one-orbit-per-weight signed count over wt V(mu);
* extremes: kernels of raising-operator powers inside the Verma model of the
  smaller factor.

All four must agree; the last method is also exposed pointwise as
:func:`multiplicity`, together with the classifying data (largest/smallest
components, generalized extreme components, minuscule closed form).
"""

from .errors import InvariantViolation
from .rootsystem import Weight
from .weyl import (dominant_representative, double_cosets, enumerate_weyl,
                   longest_element)
from .characters import (Character, character_of, weyl_dimension,
                         dominant_weight_table)
from .irreps import v_extremes_dim

__all__ = [
    "Decomposition", "decompose", "decompose_all", "multiplicity",
    "extreme_types", "generalized_prv", "minuscule_decompose",
    "component_tests", "is_minuscule",
]

METHODS = ("character", "steinberg", "klimyk", "prv")


class Decomposition:
    """Audited map from dominant highest weights to positive multiplicities.

    Construction checks the dimension count, dominance/integrality of the
    support, and the weight-multiplicity upper bound for every entry.
    """

    def __init__(self, rs, lam, mu, method, entries):
        self.rs = rs
        self.lam = lam
        self.mu = mu
        self.method = method
        self.entries = {k: v for k, v in entries.items() if v}
        self._audit()

    def _audit(self):
        rs = self.rs
        total = 0
        bound_char = character_of(rs, self.mu)
        for coords, m in self.entries.items():
            nu = Weight(coords)
            if m < 0 or not (nu.is_dominant and nu.is_integral):
                raise InvariantViolation(
                    f"bad decomposition entry {coords}: {m}")
            cap = bound_char.mult(nu - self.lam)
            if m > cap:
                raise InvariantViolation(
                    f"multiplicity {m} at {coords} exceeds weight bound {cap}")
            total += m * weyl_dimension(rs, nu)
        if total != weyl_dimension(rs, self.lam) * weyl_dimension(rs, self.mu):
            raise InvariantViolation("decomposition dimension audit failed")

    def mult(self, nu):
        key = nu.coords if isinstance(nu, Weight) else tuple(nu)
        return self.entries.get(key, 0)

    def components(self):
        return [Weight(c) for c in sorted(self.entries)]

    def as_character(self):
        return Character(dict(self.entries), "decomposition")

    def __eq__(self, other):
        return isinstance(other, Decomposition) and self.entries == other.entries

    def to_json(self):
        from .rootsystem import format_weight
        return {
            "lambda": format_weight(self.lam),
            "mu": format_weight(self.mu),
            "method": self.method,
            "entries": {format_weight(Weight(k)): v
                        for k, v in sorted(self.entries.items())},
        }


def _make(rs, lam, mu, method, entries):
    return Decomposition(rs, lam, mu, method, entries)


def _require_dom(lam, mu):
    for w in (lam, mu):
        if not (w.is_integral and w.is_dominant):
            raise ValueError(f"{w} must be dominant integral")


def _candidates(rs, lam, mu):
    """Dominant nu = lam + mu' over mu' in wt V(mu): every component's
    highest weight has this form, so these are the only candidates."""
    out = {}
    for mu_c in character_of(rs, mu).entries:
        nu = lam + Weight(mu_c)
        if nu.is_dominant:
            out[nu.coords] = nu
    return out


def _char_product(rs, lam, mu):
    ch1 = character_of(rs, lam).entries
    ch2 = character_of(rs, mu).entries
    if len(ch1) < len(ch2):
        ch1, ch2 = ch2, ch1
    out = {}
    for c1, m1 in ch1.items():
        for c2, m2 in ch2.items():
            key = tuple(a + b for a, b in zip(c1, c2))
            out[key] = out.get(key, 0) + m1 * m2
    return out


def _height_key(rs, coords):
    # total order refining the root order: lattice height first, then lex;
    # the constant inv_den scaling is dropped since only the order matters
    hs = rs._height_rows
    return (sum(h * c for h, c in zip(hs, coords)), coords)


def _decompose_character(rs, lam, mu):
    if not hasattr(rs, "_height_rows"):
        rs._height_rows = tuple(sum(rs.inv_num[i][j] for i in range(rs.rank))
                                for j in range(rs.rank))
    remaining = _char_product(rs, lam, mu)
    entries = {}
    # peeling only removes support, so one descending sweep visits every
    # highest weight in a dominance-compatible order
    for top in sorted(remaining, key=lambda c: _height_key(rs, c),
                      reverse=True):
        m = remaining.get(top, 0)
        if m == 0:
            continue
        nu = Weight(top)
        if m < 0 or not nu.is_dominant:
            raise InvariantViolation("character peeling left a non-character")
        entries[top] = m
        for c2, m2 in character_of(rs, nu).entries.items():
            left = remaining.get(c2, 0) - m * m2
            if left:
                remaining[c2] = left
            else:
                remaining.pop(c2, None)
    return entries


def _decompose_steinberg(rs, lam, mu, max_weyl=None):
    els = enumerate_weyl(rs, max_weyl)
    rho = rs.rho
    rank = rs.rank
    entries = {}
    shifted = [(w.sign, w.apply(mu + rho).coords) for w in els]
    lam_c = lam.coords
    from .characters import partition_weight_coords as pf
    for coords in _candidates(rs, lam, mu):
        target = tuple(c + 1 for c in coords)
        total = 0
        for w in els:
            m = w.matrix
            wnr = tuple(sum(m[i][j] * target[j] for j in range(rank))
                        for i in range(rank))
            base = tuple(a - b for a, b in zip(lam_c, wnr))
            sgn_w = w.sign
            for sgn_wp, wmr in shifted:
                arg = tuple(a + b for a, b in zip(base, wmr))
                p = pf(rs, arg)
                if p:
                    total += sgn_w * sgn_wp * p
        if total:
            entries[coords] = total
    return entries


def _decompose_klimyk(rs, lam, mu):
    rho = rs.rho
    entries = {}
    for mu_c, m in character_of(rs, mu).entries.items():
        xi = lam + Weight(mu_c) + rho
        dom, w = dominant_representative(rs, xi)
        if any(c == 0 for c in dom.coords):
            continue
        key = (dom - rho).coords
        entries[key] = entries.get(key, 0) + w.sign * m
    return {k: v for k, v in entries.items() if v}


def _decompose_extremes(rs, lam, mu, max_dim=None):
    # work inside the Verma model of the smaller factor
    if weyl_dimension(rs, mu) > weyl_dimension(rs, lam):
        lam, mu = mu, lam
    entries = {}
    for coords in _candidates(rs, lam, mu):
        nu = Weight(coords)
        m = v_extremes_dim(rs, mu, nu - lam, lam)
        if m:
            entries[coords] = m
    return entries


def decompose(rs, lam, mu, method="character", max_weyl=None, max_dim=None):
    """Decomposition of V(lam) (x) V(mu) by the chosen algorithm."""
    _require_dom(lam, mu)
    if method == "character":
        entries = _decompose_character(rs, lam, mu)
    elif method == "steinberg":
        entries = _decompose_steinberg(rs, lam, mu, max_weyl)
    elif method == "klimyk":
        entries = _decompose_klimyk(rs, lam, mu)
    elif method in ("prv", "extremes"):
        entries = _decompose_extremes(rs, lam, mu, max_dim)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _make(rs, lam, mu, method, entries)


def decompose_all(rs, lam, mu, max_weyl=None, max_dim=None):
    """Run all four methods and insist on exact agreement."""
    decs = {m: decompose(rs, lam, mu, m, max_weyl, max_dim) for m in METHODS}
    first = decs[METHODS[0]].entries
    for m in METHODS[1:]:
        if decs[m].entries != first:
            raise InvariantViolation(
                f"method disagreement on ({lam}, {mu}): "
                f"{METHODS[0]} vs {m}")
    return decs


def multiplicity(rs, lam, mu, nu, max_dim=None, cross_check=True):
    """Single multiplicity of V(nu) in V(lam) (x) V(mu) without a full
    decomposition, via raising-operator kernels.  When cross_check is set the
    two kernel expressions (inside V(mu) and inside V(nu)) are both computed
    and compared."""
    _require_dom(lam, mu)
    _require_dom(nu, nu)
    m1 = v_extremes_dim(rs, mu, nu - lam, lam)
    if cross_check:
        w0 = longest_element(rs)
        m2 = v_extremes_dim(rs, nu, lam + w0.apply(mu), -w0.apply(mu))
        if m1 != m2:
            raise InvariantViolation(
                f"extreme-subspace expressions disagree: {m1} != {m2}")
    return m1


def extreme_types(rs, lam, mu):
    """(largest, smallest) highest weights of the product: lam + mu and the
    dominant representative of lam + w0(mu); both multiplicity one."""
    _require_dom(lam, mu)
    w0 = longest_element(rs)
    cartan = lam + mu
    minimal = rs.dominant_in_orbit(lam + w0.apply(mu))
    for nu in (cartan, minimal):
        if multiplicity(rs, lam, mu, nu, cross_check=False) != 1:
            raise InvariantViolation(f"extreme component {nu} not simple")
    return cartan, minimal


def generalized_prv(rs, lam, mu, w, max_weyl=None, with_kprv=False,
                    max_dim=None):
    """Report on the extreme component attached to w: its multiplicity, the
    double-coset lower bound, and optionally the generated-submodule count."""
    _require_dom(lam, mu)
    target = rs.dominant_in_orbit(lam + w.apply(mu))
    mult = multiplicity(rs, lam, mu, target, cross_check=False)
    cosets = double_cosets(rs, lam, mu, max_weyl)
    fibers = {}
    for rep in cosets.representatives:
        key = rs.dominant_in_orbit(lam + rep.apply(mu)).coords
        fibers[key] = fibers.get(key, 0) + 1
    bound = fibers[target.coords]
    if mult < max(1, bound):
        raise InvariantViolation(
            f"extreme component bound violated at {target}: {mult} < {bound}")
    if (lam + w.apply(mu)).is_dominant and mult != 1:
        raise InvariantViolation("dominant extreme component not simple")
    report = {
        "target": target,
        "mult": mult,
        "lower_bound": bound,
        "kprv_mult": None,
    }
    if with_kprv:
        from .errors import CapExceeded
        from .irreps import kprv_multiplicity
        try:
            report["kprv_mult"] = kprv_multiplicity(rs, lam, mu, w, max_dim)
        except CapExceeded:
            report["kprv_mult"] = None
        if report["kprv_mult"] not in (None, 1):
            raise InvariantViolation(
                "generated submodule must contain the extreme component once")
    return report


def is_minuscule(rs, mu):
    """wt V(mu) is a single orbit iff mu is the only dominant weight below it
    in the root-lattice order."""
    if not (mu.is_integral and mu.is_dominant):
        return False
    table = dominant_weight_table(rs, mu)
    return len(table) == 1


def minuscule_decompose(rs, lam, mu, max_weyl=None):
    """Orbit-sum closed form, valid when mu is minuscule."""
    _require_dom(lam, mu)
    if not is_minuscule(rs, mu):
        raise ValueError(f"{mu} is not minuscule")
    entries = {}
    for w in rs.orbit(mu):
        nu = lam + w
        if nu.is_dominant:
            entries[nu.coords] = entries.get(nu.coords, 0) + 1
    if any(v != 1 for v in entries.values()):
        raise InvariantViolation("minuscule components must be simple")
    count = len(double_cosets(rs, lam, mu, max_weyl).representatives)
    if count != len(entries):
        raise InvariantViolation(
            f"component count {len(entries)} != double coset count {count}")
    return _make(rs, lam, mu, "minuscule", entries)


def component_tests(rs, lam, mu, max_dim=None):
    """Positivity/equality certificates from root subtraction and from the
    (lam + mu')(h_i) >= -1 condition.

    Returns a report dict: root_subtraction maps each qualifying positive
    root beta to the verified positive multiplicity at lam + mu - beta;
    minus_one_applies tells whether the bound condition holds, in which case
    every multiplicity equals the corresponding weight multiplicity of V(mu)
    (verified).
    """
    _require_dom(lam, mu)
    report = {"root_subtraction": {}, "minus_one_applies": None}
    for k, beta in enumerate(rs.positive_roots):
        beta_w = rs.root_to_weight(beta)
        nu = lam + mu - beta_w
        if not nu.is_dominant:
            continue
        ok = True
        for i in range(rs.rank):
            if lam[i] == 0 or mu[i] == 0:
                down = beta - rs.simple_root(i)
                if not any(down.coeffs):
                    ok = False
                    break
                key = down.coeffs if down.is_positive else None
                if key is not None and key in rs.root_index:
                    ok = False
                    break
        if ok:
            m = multiplicity(rs, lam, mu, nu, cross_check=False)
            if m <= 0:
                raise InvariantViolation(
                    f"root-subtraction component {nu} missing")
            report["root_subtraction"][beta.coeffs] = m
    mu_char = character_of(rs, mu)
    cond = all(lam[i] + Weight(mu_c)[i] >= -1
               for mu_c in mu_char.entries for i in range(rs.rank))
    report["minus_one_applies"] = cond
    if cond:
        dec = decompose(rs, lam, mu, "character")
        for coords, m in dec.entries.items():
            if m != mu_char.mult(Weight(coords) - lam):
                raise InvariantViolation(
                    "saturated multiplicities must equal weight multiplicities")
        report["decomposition"] = dec
    return report
