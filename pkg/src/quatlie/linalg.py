"""Exact linear algebra over Q on sparse coordinate vectors.

A vector is a dict mapping coordinate index to a nonzero Fraction.  The
span engine keeps a reduced row echelon basis: every pivot is 1, pivot
columns are cleared in all other rows, and rows are ordered by pivot
column.  Reduced echelon form is canonical for a subspace, so ranks,
membership tests and serialized bases never depend on insertion order.
There is no rank tolerance anywhere; a vector is in a span exactly when
it reduces to zero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateInputError

Vec = dict  # {int: Fraction}, zero entries never stored


def vec_iadd_scaled(target: Vec, source: Vec, factor: Fraction) -> Vec:
    """In place ``target += factor * source``, dropping entries that cancel."""
    if not factor:
        return target
    for idx, val in source.items():
        acc = target.get(idx)
        if acc is None:
            target[idx] = factor * val
        else:
            acc = acc + factor * val
            if acc:
                target[idx] = acc
            else:
                del target[idx]
    return target


def vec_scaled(source: Vec, factor: Fraction) -> Vec:
    return {idx: factor * val for idx, val in source.items()} if factor else {}


def vec_from_dense(values) -> Vec:
    out = {}
    for idx, val in enumerate(values):
        if val:
            out[idx] = Fraction(val)
    return out


def vec_to_dense(vec: Vec, length: int) -> list[Fraction]:
    out = [Fraction(0)] * length
    for idx, val in vec.items():
        out[idx] = val
    return out


class SpanBasis:
    """Reduced row echelon basis of a rational subspace.

    Because the form is fully reduced, a stored row contains no pivot
    column of any other row.  Reducing a vector therefore needs a single
    pass over the pivot columns present in it.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.rows: list[Vec] = []
        self.pivots: list[int] = []
        self._by_pivot: dict[int, Vec] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vec) -> Vec:
        """Residual of ``vec`` after eliminating every pivot column."""
        out = dict(vec)
        by_pivot = self._by_pivot
        for piv in [idx for idx in out if idx in by_pivot]:
            coeff = out.get(piv)
            if coeff:
                vec_iadd_scaled(out, by_pivot[piv], -coeff)
        return out

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)

    def coords(self, vec: Vec):
        """Coefficients of ``vec`` over the stored rows, or None if outside."""
        out = dict(vec)
        coeffs = [Fraction(0)] * len(self.rows)
        by_pivot = self._by_pivot
        for piv in [idx for idx in out if idx in by_pivot]:
            coeff = out.get(piv)
            if coeff:
                coeffs[self.pivots.index(piv)] = coeff
                vec_iadd_scaled(out, by_pivot[piv], -coeff)
        if out:
            return None
        return coeffs

    def insert(self, vec: Vec) -> bool:
        """Add a vector to the span; returns True when the rank grew."""
        residual = self.reduce(vec)
        if not residual:
            return False
        piv = min(residual)
        lead = residual[piv]
        row = {idx: val / lead for idx, val in residual.items()}
        for other in self.rows:
            coeff = other.get(piv)
            if coeff:
                vec_iadd_scaled(other, row, -coeff)
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.rows.insert(pos, row)
        self.pivots.insert(pos, piv)
        self._by_pivot[piv] = row
        return True

    def extend(self, vectors) -> int:
        added = 0
        for vec in vectors:
            if self.insert(vec):
                added += 1
        return added

    def same_span(self, other: "SpanBasis") -> bool:
        """Exact subspace equality; reduced echelon form is canonical."""
        return self.pivots == other.pivots and self.rows == other.rows


def span_of(vectors, ambient_dim: int) -> SpanBasis:
    basis = SpanBasis(ambient_dim)
    basis.extend(vectors)
    return basis


def rank_of(vectors, ambient_dim: int) -> int:
    return span_of(vectors, ambient_dim).rank


def independent_span(vectors, ambient_dim: int) -> SpanBasis:
    """Span of vectors required to be independent; raises otherwise."""
    basis = SpanBasis(ambient_dim)
    for vec in vectors:
        if not basis.insert(vec):
            raise DegenerateInputError("vectors are linearly dependent over Q")
    return basis


class LinearSolver:
    """Expresses vectors over a fixed independent (not necessarily echelon) basis.

    Each basis vector is augmented with a tracking coordinate beyond the
    ambient dimension, so reduction of an augmented input reads off the
    coefficients over the original rows.
    """

    def __init__(self, rows: list[Vec], ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.size = len(rows)
        self._basis = SpanBasis(ambient_dim + self.size)
        for offset, row in enumerate(rows):
            augmented = dict(row)
            augmented[ambient_dim + offset] = Fraction(1)
            residual = self._basis.reduce(augmented)
            # a dependent row leaves only tracking coordinates behind
            if not residual or min(residual) >= ambient_dim:
                raise DegenerateInputError("solver rows are linearly dependent")
            self._basis.insert(residual)

    def express(self, vec: Vec):
        """Coefficients c with ``vec == sum c[i] * rows[i]``, or None."""
        residual = self._basis.reduce(dict(vec))
        ambient = self.ambient_dim
        if any(idx < ambient for idx in residual):
            return None
        coeffs = [Fraction(0)] * self.size
        for idx, val in residual.items():
            coeffs[idx - ambient] = -val
        return coeffs


def kernel_basis(equations: list[Vec], nvars: int) -> list[Vec]:
    """Canonical basis of the solution space of ``equations @ x = 0``.

    Free variables are taken in ascending order; each kernel vector sets
    one free variable to 1 and back-substitutes through the reduced
    echelon form of the equations.
    """
    echelon = SpanBasis(nvars)
    echelon.extend(equations)
    pivot_set = set(echelon.pivots)
    kernel = []
    for free in range(nvars):
        if free in pivot_set:
            continue
        vec: Vec = {free: Fraction(1)}
        for piv, row in zip(echelon.pivots, echelon.rows):
            coeff = row.get(free)
            if coeff:
                vec[piv] = -coeff
        kernel.append(vec)
    return kernel
