"""The gl(n,H) bracket, bracket closure of a real span, and structure constants.

The bracket on quaternion matrices is the matrix commutator evaluated in
exact quaternion arithmetic.  Written on components ``X + J*Y`` it is

    [X1 + J*Y1, X2 + J*Y2]
        = (X1 X2 - X2 X1 - conj(Y1) Y2 + conj(Y2) Y1)
        + J*(Y1 X2 - Y2 X1 + conj(X1) Y2 - conj(X2) Y1)

which coincides with the commutator of the 2n x 2n complex images; the
test suite checks both paths against each other.

Closure works over a worklist: every accepted member is bracketed
against the members accepted before it, and results that enlarge the
span are queued in turn.  The ambient real dimension 4*n*n bounds the
number of accepted members, so the loop terminates.  The resulting
reduced-echelon basis is canonical for the closed subspace, hence
independent of generator order.  A single closure call runs on one
thread (insertion into the shared echelon basis is order-sensitive);
distinct calls are independent because all inputs are immutable.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotClosedError
from .linalg import LinearSolver, SpanBasis, Vec
from .matrices import QuatMatrix, apply_sigma, apply_tau, flatten


def bracket(x: QuatMatrix, y: QuatMatrix) -> QuatMatrix:
    """Commutator ``x @ y - y @ x``; raises on dimension mismatch."""
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")
    return (x @ y) - (y @ x)


@dataclass
class StructureConstants:
    """Sparse bracket table over a fixed ordered basis.

    Only keys with i < j are stored; the i > j values follow by
    antisymmetry and the diagonal vanishes.
    """

    dim: int
    table: dict = field(default_factory=dict)  # (i, j) -> ((k, Fraction), ...)

    def set_entry(self, i: int, j: int, terms):
        if i >= j:
            raise ValueError("entries are stored with i < j only")
        terms = tuple((k, c) for k, c in terms if c)
        if terms:
            self.table[(i, j)] = terms

    def get(self, i: int, j: int):
        """Bracket coefficients of [x_i, x_j] for arbitrary index order."""
        if i == j:
            return ()
        if i < j:
            return self.table.get((i, j), ())
        return tuple((k, -c) for k, c in self.table.get((j, i), ()))

    def ad(self, i: int, coeffs: Vec) -> Vec:
        """Coefficients of [x_i, v] for v given by basis coefficients."""
        out: Vec = {}
        for j, cj in coeffs.items():
            for k, c in self.get(i, j):
                acc = out.get(k, Fraction(0)) + cj * c
                if acc:
                    out[k] = acc
                else:
                    out.pop(k, None)
        return out

    def jacobi_defect(self, i: int, j: int, k: int) -> Vec:
        """[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] as coefficients."""
        out: Vec = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = {m: coeff for m, coeff in self.get(b, c)}
            for m, coeff in self.ad(a, inner).items():
                acc = out.get(m, Fraction(0)) + coeff
                if acc:
                    out[m] = acc
                else:
                    out.pop(m, None)
        return out


@dataclass
class ClosureResult:
    span: SpanBasis
    matrices: list[QuatMatrix]
    constants: StructureConstants | None = None

    @property
    def dim(self) -> int:
        return self.span.rank


def close_under_bracket(generators: list[QuatMatrix]) -> ClosureResult:
    """Smallest real subspace containing the generators and closed under bracket.

    Dependent or zero generators are harmless; they reduce away during
    insertion.  Worst case the closure is all of gl(n, H).
    """
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    span = SpanBasis(4 * n * n)
    members: list[QuatMatrix] = []
    pending = deque(generators)
    while pending:
        candidate = pending.popleft()
        if not span.insert(flatten(candidate)):
            continue
        for other in members:
            pending.append(bracket(other, candidate))
        members.append(candidate)
    matrices = [QuatMatrix.unflatten(n, row) for row in span.rows]
    return ClosureResult(span=span, matrices=matrices)


def structure_constants(matrices: list[QuatMatrix]) -> StructureConstants:
    """Bracket table of a bracket-closed list of independent matrices."""
    if not matrices:
        return StructureConstants(dim=0)
    n = matrices[0].n
    ambient = 4 * n * n
    solver = LinearSolver([flatten(m) for m in matrices], ambient)
    sc = StructureConstants(dim=len(matrices))
    for i, x in enumerate(matrices):
        for j in range(i + 1, len(matrices)):
            prod = bracket(x, matrices[j])
            if prod.is_zero():
                continue
            coeffs = solver.express(flatten(prod))
            if coeffs is None:
                raise NotClosedError(
                    f"bracket of basis elements {i}, {j} leaves the span"
                )
            sc.set_entry(i, j, [(k, c) for k, c in enumerate(coeffs) if c])
    return sc


def closure(generators: list[QuatMatrix]) -> ClosureResult:
    """Closure together with the structure constants of its echelon basis."""
    result = close_under_bracket(generators)
    result.constants = structure_constants(result.matrices)
    return result


@dataclass
class JacobiReport:
    dim: int
    exhaustive: bool
    triples_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def jacobi_check(
    sc: StructureConstants,
    exhaustive_limit: int = 40,
    samples: int = 500,
    seed: int = 20240,
) -> JacobiReport:
    """Exact Jacobi identity over the table.

    All triples are checked up to ``exhaustive_limit`` dimensions; above
    that a fixed-seed sample of at least ``samples`` triples is used.
    """
    dim = sc.dim
    failures = []
    checked = 0
    if dim <= exhaustive_limit:
        exhaustive = True
        for i in range(dim):
            for j in range(i + 1, dim):
                for k in range(j + 1, dim):
                    checked += 1
                    if sc.jacobi_defect(i, j, k):
                        failures.append((i, j, k))
    else:
        exhaustive = False
        rng = random.Random(seed)
        seen = set()
        while len(seen) < samples:
            triple = tuple(sorted(rng.sample(range(dim), 3)))
            if triple in seen:
                continue
            seen.add(triple)
            checked += 1
            if sc.jacobi_defect(*triple):
                failures.append(triple)
    return JacobiReport(
        dim=dim, exhaustive=exhaustive, triples_checked=checked, failures=failures
    )


@dataclass
class EquivarianceReport:
    pairs_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def check_conjugation_equivariance(matrices: list[QuatMatrix]) -> EquivarianceReport:
    """Verify sigma[x,y] == [sigma x, sigma y] and likewise for tau.

    Checked on all basis pairs; for a basis of a bracket-closed span this
    pins the identity on the whole algebra by bilinearity.
    """
    sigmas = [apply_sigma(m) for m in matrices]
    taus = [apply_tau(m) for m in matrices]
    failures = []
    pairs = 0
    for i, x in enumerate(matrices):
        for j in range(i + 1, len(matrices)):
            pairs += 1
            br = bracket(x, matrices[j])
            if apply_sigma(br) != bracket(sigmas[i], sigmas[j]):
                failures.append((i, j, "sigma"))
            if apply_tau(br) != bracket(taus[i], taus[j]):
                failures.append((i, j, "tau"))
    return EquivarianceReport(pairs_checked=pairs, failures=failures)
