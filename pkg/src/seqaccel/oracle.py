"""Determinant route to the transformation, and identity checks.

Everything here is deliberately independent of the lattice recursion:
the transform values come from explicit determinant ratios, the
molecule quantities F_k^n and G_k^n from closed formulas built on the
Hankel-like determinants ``psi_det`` and ``phi_det``, and the bilinear
identities are verified as residuals.  Agreement of these routes with
the recursion is an end-to-end correctness check of both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .determinants import determinant, solve_exact
from .errors import SingularError, SpecError, WindowError
from .modes import RATIONAL
from .sequences import Sequence, forward_difference


def _diff_row(seq, order, n, width):
    d = forward_difference(seq, order)
    return [d.at(n + j) for j in range(width)]


def psi_det(v, k, n):
    """k x k determinant with rows v, D^2 v, D^4 v, ... over columns n..n+k-1.

    Conventions: k = -1 gives 0, k = 0 gives 1.
    """
    one = v.mode.convert(1)
    if k == -1:
        return one * 0
    if k == 0:
        return one
    if k < -1:
        raise ValueError("order must be >= -1")
    rows = [_diff_row(v, 2 * i, n, k) for i in range(k)]
    return determinant(rows, v.mode.is_exact)


def phi_det(v, k, n):
    """Like psi_det but the first row holds the column labels n..n+k-1."""
    one = v.mode.convert(1)
    if k == -1:
        return one * 0
    if k == 0:
        return one
    if k < -1:
        raise ValueError("order must be >= -1")
    rows = [[v.mode.convert(n + j) for j in range(k)]]
    for i in range(k - 1):
        rows.append(_diff_row(v, 2 * i, n, k))
    return determinant(rows, v.mode.is_exact)


def t_numerator(seq, k, n):
    rows = [_diff_row(seq, 2 * i, n, k + 1) for i in range(k + 1)]
    return determinant(rows, seq.mode.is_exact)


def t_denominator(seq, k, n):
    one = seq.mode.convert(1)
    rows = [[one] * (k + 1)]
    for i in range(1, k + 1):
        rows.append(_diff_row(seq, 2 * i, n, k + 1))
    return determinant(rows, seq.mode.is_exact)


def t_determinant(seq, k, n):
    """Transform value T_k^(n) as the ratio of the two (k+1)x(k+1) determinants."""
    with seq.mode.context():
        den = t_denominator(seq, k, n)
        if den == 0:
            raise SingularError(f"zero denominator determinant at (k={k}, n={n})")
        return t_numerator(seq, k, n) / den


@dataclass
class MoleculeSolution:
    """Closed-formula F_k^n and G_k^n keyed by (level, label)."""

    source: Sequence
    F: dict = field(default_factory=dict)
    G: dict = field(default_factory=dict)

    def ratio(self, level, n):
        f = self.F.get((level, n))
        g = self.G.get((level, n))
        if f is None or g is None:
            return None
        if f == 0:
            raise SingularError(f"F_{level}^{n} = 0")
        return g / f


def _psi_of_diff(seq, diff_order, k, n):
    # conventions first so small levels never demand unavailable windows
    if k <= 0:
        return psi_det(seq, k, n)
    return psi_det(forward_difference(seq, diff_order), k, n)


def _phi_of_diff(seq, diff_order, k, n):
    if k <= 0:
        return phi_det(seq, k, n)
    return phi_det(forward_difference(seq, diff_order), k, n)


def molecule_levels(seq, level, n):
    """(F, G) at one lattice level via the six closed formulas."""
    k, r = divmod(level, 3)
    if r == 0:
        return (
            _psi_of_diff(seq, 3, k - 1, n),
            _psi_of_diff(seq, 0, k, n),
        )
    if r == 1:
        return (
            _psi_of_diff(seq, 1, k, n),
            -_psi_of_diff(seq, 4, k - 1, n),
        )
    return (
        _psi_of_diff(seq, 2, k, n),
        _phi_of_diff(seq, 1, k + 1, n),
    )


def molecule_solution(seq, max_level):
    """Populate F and G for levels 0..max_level wherever the window fits."""
    mol = MoleculeSolution(seq)
    with seq.mode.context():
        for level in range(0, max_level + 1):
            for n in seq.labels():
                try:
                    f, g = molecule_levels(seq, level, n)
                except WindowError:
                    continue
                mol.F[(level, n)] = f
                mol.G[(level, n)] = g
    return mol


@dataclass
class BilinearReport:
    residuals: dict
    checked: int
    max_scaled_residual: float
    zero_f_cells: list

    @property
    def all_zero(self):
        return all(r == 0 for eq in self.residuals.values() for r in eq.values())


_BILINEAR_FORMS = {
    # each maps (F, G, k, n) -> lhs - rhs, or None if an operand is missing
    "fg_fg_ff": lambda F, G, k, n: _residual(
        [(F, k, n), (G, k, n + 1)], [(F, k, n + 1), (G, k, n)],
        [(F, k + 1, n), (F, k - 1, n + 1)]),
    "fg_cross": lambda F, G, k, n: _residual(
        [(F, k + 2, n), (G, k - 1, n + 1)], [(F, k - 1, n + 1), (G, k + 2, n)],
        [(F, k + 1, n + 1), (F, k, n)]),
    "ff_ff_ff": lambda F, G, k, n: _residual(
        [(F, k, n), (F, k + 2, n + 1)], [(F, k, n + 1), (F, k + 2, n)],
        [(F, k + 3, n), (F, k - 1, n + 1)]),
}


def _residual(term_a, term_b, term_c):
    vals = []
    for pair in (term_a, term_b, term_c):
        prod = None
        for store, level, n in pair:
            v = store.get((level, n))
            if v is None:
                return None
            prod = v if prod is None else prod * v
        vals.append(prod)
    lhs = vals[0] - vals[1]
    rhs = vals[2]
    scale = max(abs(lhs), abs(rhs), 1)
    return lhs - rhs, scale


def check_bilinear(seq, k_max, n_range=None):
    """Residuals of the three bilinear identities over all computable cells."""
    mol = molecule_solution(seq, k_max + 3)
    if n_range is None:
        n_range = seq.labels()
    residuals = {name: {} for name in _BILINEAR_FORMS}
    max_scaled = 0.0
    checked = 0
    with seq.mode.context():
        for name, form in _BILINEAR_FORMS.items():
            for k in range(1, k_max + 1):
                for n in n_range:
                    out = form(mol.F, mol.G, k, n)
                    if out is None:
                        continue
                    r, scale = out
                    residuals[name][(k, n)] = r
                    checked += 1
                    if r != 0:
                        max_scaled = max(max_scaled, float(abs(r) / scale))
    # F_0 = 0 is structural; only positive levels signal degeneracy
    zero_f = [key for key, v in mol.F.items() if v == 0 and key[0] > 0]
    return BilinearReport(residuals, checked, max_scaled, zero_f)


def kernel_coefficients(ratios):
    """Solve for the a_i certifying S_n = S + sum_i a_i D^{2i} S_n.

    The remainder sum_j c_j r_j^n lies in the order-k kernel iff
    p(r_j) = 1 for all j, where p(x) = sum_i a_i (x - 1)^{2i}.
    """
    k = len(ratios)
    ratios = [Fraction(r) for r in ratios]
    matrix = [[(r - 1) ** (2 * (i + 1)) for i in range(k)] for r in ratios]
    return solve_exact(matrix, [Fraction(1)] * k)


def kernel_construct(limit, ratios, weights, start_label, count, mode=RATIONAL):
    """Sequence S_n = S + sum_j c_j r_j^n, certified to lie in the order-k kernel."""
    if len(ratios) != len(weights) or len(ratios) == 0:
        raise SpecError("ratios and weights must have equal positive length")
    if len(set(ratios)) != len(ratios):
        raise SpecError("ratios must be distinct")
    if any(w == 0 for w in weights):
        raise SpecError("weights must be nonzero")
    kernel_coefficients(ratios)  # raises KernelDegeneracyError if uncertifiable
    values = []
    for n in range(start_label, start_label + count):
        s = Fraction(limit)
        for r, c in zip(ratios, weights):
            s += Fraction(c) * Fraction(r) ** n
        values.append(s)
    return Sequence.from_iterable(values, start_label, mode)
