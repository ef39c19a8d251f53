"""Contravariant-form determinants: the direct Gram determinant against its
product formula, and the zero-weight-space determinant product formula.

Overall constants are unspecified by the theory, so determinants are compared
up to a single nonzero rational scalar (exact polynomial division).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import CapExceeded
from .hpoly import HPoly
from .rootsystem import Weight, RootVector
from .characters import partition_function
from .enveloping import UElement, chevalley_basis, shapovalov
from .irreps import _monomials, realize_cached, zero_weight_spectrum

__all__ = ["DetPolynomial", "shapovalov_det", "prv_det", "det_poly"]


@dataclass
class DetPolynomial:
    """Polynomial in the simple coroot coordinates, optionally in factored
    form: scalar * prod (linear form)^exponent."""

    nvars: int
    scalar: Fraction = 1
    factors: tuple = ()      # ((coeffs tuple, const, exponent), ...)
    expanded_cache: HPoly = field(default=None, repr=False)

    def expand(self):
        if self.expanded_cache is None:
            out = HPoly.constant(self.nvars, self.scalar)
            for coeffs, const, exp in self.factors:
                lin = HPoly.linear(list(coeffs), const)
                for _ in range(exp):
                    out = out * lin
            self.expanded_cache = out
        return self.expanded_cache

    @classmethod
    def from_poly(cls, poly):
        return cls(poly.nvars, 1, (), poly)

    def degree(self):
        if self.factors:
            return sum(e for _, _, e in self.factors)
        return self.expand().degree()

    def evaluate(self, lam):
        coords = list(lam.coords) if isinstance(lam, Weight) else list(lam)
        return self.expand().evaluate(coords)

    def ratio_to(self, other):
        return self.expand().ratio_to(other.expand())

    def to_json(self):
        return {
            "scalar": str(self.scalar),
            "factors": [
                {"coeffs": [str(c) for c in coeffs], "const": str(const),
                 "power": exp}
                for coeffs, const, exp in self.factors
            ],
        }


def det_poly(matrix):
    """Cofactor-expansion determinant of a small matrix of HPoly entries."""
    n = len(matrix)
    if n == 0:
        return HPoly.constant(1, 1)
    nv = matrix[0][0].nvars
    if n == 1:
        return matrix[0][0]
    out = HPoly.constant(nv, 0)
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero:
            continue
        minor = [[matrix[r][c] for c in range(n) if c != j] for r in range(1, n)]
        term = entry * det_poly(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def _as_root_vector(rs, nu):
    if isinstance(nu, RootVector):
        return nu
    if isinstance(nu, Weight):
        coords = rs.root_lattice_coords(nu)
        if coords is None or any(c < 0 for c in coords):
            raise ValueError("depth must lie in the nonnegative root lattice")
        return RootVector(coords)
    return RootVector(tuple(nu))


def _ht_cap(rs, cap):
    if cap is not None:
        return cap
    return 6 if rs.rank == 1 else 4


def shapovalov_det(rs, nu, mode="direct", max_height=None):
    """Determinant of the contravariant form on the depth-nu lowering space.

    direct: exact Gram determinant over the fixed lowering-monomial basis.
    formula: prod over positive roots and levels of
             (h_alpha + rho(h_alpha) - j)^{P(nu - j alpha)}, constant 1.
    """
    nu = _as_root_vector(rs, nu)
    cap = _ht_cap(rs, max_height)
    if nu.height > cap:
        raise CapExceeded(f"depth height {nu.height} exceeds cap {cap}")
    if mode == "formula":
        rho = rs.rho
        factors = []
        for k in range(rs.nroots):
            alpha = rs.positive_roots[k]
            j = 1
            while True:
                rem = tuple(a - j * b for a, b in zip(nu.coeffs, alpha.coeffs))
                if any(x < 0 for x in rem):
                    break
                p = partition_function(rs, rem)
                if p:
                    const = rs.pairing(rho, k) - j
                    factors.append((rs.coroots[k], const, p))
                j += 1
        return DetPolynomial(rs.rank, 1, tuple(factors))
    if mode != "direct":
        raise ValueError(f"unknown mode {mode!r}")
    basis = chevalley_basis(rs)
    monos = sorted(_monomials(rs, nu.coeffs))
    elements = []
    for mono in monos:
        exps = [0] * basis.dim
        for k, e in enumerate(mono):
            exps[k] = e  # f-block occupies the leading positions
        elements.append(UElement(basis.algebra, {tuple(exps): 1}))
    gram = [[shapovalov(basis, bi, bj) for bj in elements] for bi in elements]
    return DetPolynomial.from_poly(det_poly(gram) if gram
                                   else HPoly.constant(rs.rank, 1))


def prv_det(rs, mu, max_dim=None):
    """Product formula for the zero-weight-space determinant of V(mu).

    Returns (determinant, leading, spectra): the factored determinant built
    from the eigenvalue multiplicities of f_alpha e_alpha on V(mu)_0, the
    degree-sum companion prod h_alpha^{m_mu(alpha)}, and the spectra per
    positive root.  For an empty zero weight space the determinant is the
    constant 1 (empty matrix) and spectra are empty.
    """
    if not (mu.is_integral and mu.is_dominant):
        raise ValueError("mu must be dominant integral")
    if rs.root_lattice_coords(mu) is None:
        return (DetPolynomial(rs.rank, 1, ()), DetPolynomial(rs.rank, 1, ()),
                {})
    real = realize_cached(rs, mu, max_dim)
    rho = rs.rho
    factors = []
    lead = []
    scalar = Fraction(1)
    spectra = {}
    for k in range(rs.nroots):
        spec, m_sum = zero_weight_spectrum(rs, real, k)
        spectra[rs.positive_roots[k].coeffs] = spec
        if m_sum:
            lead.append((rs.coroots[k], 0, m_sum))
        base = rs.pairing(rho, k) - 1
        for j, m in sorted(spec.items()):
            if j == 0:
                continue
            # falling factorial {a, j} = (-1)^j j! a(a-1)...(a-j+1)
            scalar *= (Fraction(-1) ** j * factorial(j)) ** m
            for t in range(j):
                factors.append((rs.coroots[k], base - t, m))
    det = DetPolynomial(rs.rank, scalar, tuple(factors))
    leading = DetPolynomial(rs.rank, 1, tuple(lead))
    return det, leading, spectra
