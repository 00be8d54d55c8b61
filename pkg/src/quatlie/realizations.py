"""Named matrix algebras and Chevalley generators for the classical types.

Named algebras come with an explicit real basis of rational-coordinate
matrices and an exact membership predicate; every builder double-checks
the basis against its closed-form dimension.

Chevalley generators use the defining matrix realizations:

  * type A_l in sl(l+1, C): h_i = E_ii - E_{i+1,i+1}, e_i = E_{i,i+1},
    f_i = E_{i+1,i};
  * type B_l in so(2l+1, C) for the symmetric form
    S = E_00 + sum_p (E_{p, l+p} + E_{l+p, p}) on coordinates
    (0 | 1..l | l+1..2l), with the short simple root listed first;
  * type C_l in sp(2l, C) for the form Omega = [[0, I], [-I, 0]];
  * type D_l in so(2l, C) for the form S = [[0, I], [I, 0]].

Each constructor verifies the generator relations [h_i, h_j] = 0,
[e_i, f_j] = delta_ij h_i, [h_i, e_j] = c_ji e_j, [h_i, f_j] = -c_ji f_j
exactly against the stored Cartan matrix before returning.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .bracket import bracket
from .errors import StructuralFailureError
from .matrices import QuatMatrix, quat_transpose_mj
from .rootsystem import CartanMatrix, cartan_matrix
from .scalars import GR_ONE, Q_I, Q_J, Q_K, Q_ONE, Quaternion

MAX_NAMED_N = 8
MAX_AMBIENT_N = 10  # keeps every flattened span at 4*n*n <= 400 coordinates


def _unit(n, p, q, coeff=Q_ONE):
    return QuatMatrix.unit(n, p, q, coeff)


def _units(n, *entries):
    return QuatMatrix.unit_sum(n, [(p, q, c) for p, q, c in entries])


# ---------------------------------------------------------------------------
# Named algebras
# ---------------------------------------------------------------------------


@dataclass
class NamedAlgebra:
    name: str
    n: int
    basis: list[QuatMatrix]
    dim: int
    predicate: str


def _basis_gl_h(n):
    out = []
    for p in range(n):
        for q in range(n):
            for coeff in (Q_ONE, Q_I, Q_J, Q_K):
                out.append(_unit(n, p, q, coeff))
    return out


def _basis_sl_h(n):
    out = []
    for p in range(n):
        for q in range(n):
            if p == q:
                continue
            for coeff in (Q_ONE, Q_I, Q_J, Q_K):
                out.append(_unit(n, p, q, coeff))
    for p in range(n - 1):
        out.append(_units(n, (p, p, Q_ONE), (n - 1, n - 1, -Q_ONE)))
    for p in range(n):
        for coeff in (Q_I, Q_J, Q_K):
            out.append(_unit(n, p, p, coeff))
    return out


def _basis_sk_c(n):
    out = []
    for p in range(n):
        for q in range(n):
            if p != q:
                out.append(_unit(n, p, q, Q_ONE))
                out.append(_unit(n, p, q, Q_I))
    for p in range(n - 1):
        out.append(_units(n, (p, p, Q_ONE), (n - 1, n - 1, -Q_ONE)))
    for p in range(n):
        out.append(_unit(n, p, p, Q_I))
    return out


def _basis_sl_c(n):
    out = []
    for p in range(n):
        for q in range(n):
            if p != q:
                out.append(_unit(n, p, q, Q_ONE))
                out.append(_unit(n, p, q, Q_I))
    for p in range(n - 1):
        for coeff in (Q_ONE, Q_I):
            out.append(
                _units(n, (p, p, coeff), (p + 1, p + 1, -coeff))
            )
    return out


def _basis_u(n):
    out = [_unit(n, p, p, Q_I) for p in range(n)]
    for p in range(n):
        for q in range(p + 1, n):
            out.append(_units(n, (p, q, Q_ONE), (q, p, -Q_ONE)))
            out.append(_units(n, (p, q, Q_I), (q, p, Q_I)))
    return out


def _basis_so_c(n):
    out = []
    for p in range(n):
        for q in range(p + 1, n):
            out.append(_units(n, (p, q, Q_ONE), (q, p, -Q_ONE)))
            out.append(_units(n, (p, q, Q_I), (q, p, -Q_I)))
    return out


def _basis_so_star(n):
    # A antisymmetric complex, B Hermitian
    out = _basis_so_c(n)
    for p in range(n):
        out.append(_unit(n, p, p, Q_J))
    for p in range(n):
        for q in range(p + 1, n):
            out.append(_units(n, (p, q, Q_J), (q, p, Q_J)))
            out.append(_units(n, (p, q, Q_K), (q, p, -Q_K)))
    return out


def _basis_sp(n):
    # A skew-Hermitian, B symmetric
    out = _basis_u(n)
    for p in range(n):
        out.append(_unit(n, p, p, Q_J))
        out.append(_unit(n, p, p, Q_K))
    for p in range(n):
        for q in range(p + 1, n):
            out.append(_units(n, (p, q, Q_J), (q, p, Q_J)))
            out.append(_units(n, (p, q, Q_K), (q, p, Q_K)))
    return out


_BUILDERS = {
    "gl_n_H": (_basis_gl_h, lambda n: 4 * n * n),
    "sl_n_H": (_basis_sl_h, lambda n: 4 * n * n - 1),
    "sk_n_C": (_basis_sk_c, lambda n: 2 * n * n - 1),
    "sl_n_C": (_basis_sl_c, lambda n: 2 * (n * n - 1)),
    "u_n": (_basis_u, lambda n: n * n),
    "so_n_C": (_basis_so_c, lambda n: n * (n - 1)),
    "so_star_2n": (_basis_so_star, lambda n: n * (2 * n - 1)),
    "sp_n": (_basis_sp, lambda n: n * (2 * n + 1)),
}

CLI_NAMES = {
    "gl-h": "gl_n_H",
    "sl-h": "sl_n_H",
    "so-star": "so_star_2n",
    "sp": "sp_n",
    "sl-c": "sl_n_C",
    "so-c": "so_n_C",
    "u": "u_n",
    "sk": "sk_n_C",
}


def build_named(name: str, n: int) -> NamedAlgebra:
    if name not in _BUILDERS:
        raise ValueError(f"unknown algebra name {name!r}")
    if not 2 <= n <= MAX_NAMED_N:
        raise ValueError(f"n={n} out of range [2, {MAX_NAMED_N}]")
    if name == "so_n_C" and n == 2:
        warnings.warn("so(2, C) is abelian, not semisimple", stacklevel=2)
    builder, dim_formula = _BUILDERS[name]
    basis = builder(n)
    if len(basis) != dim_formula(n):
        raise StructuralFailureError(
            f"{name} basis has {len(basis)} elements, expected {dim_formula(n)}"
        )
    for m in basis:
        if not membership(name, n, m):
            raise StructuralFailureError(f"{name} basis element fails its predicate")
    return NamedAlgebra(
        name=name, n=n, basis=basis, dim=len(basis), predicate=name
    )


def membership(name: str, n: int, m: QuatMatrix) -> bool:
    """Exact defining predicate of the named algebra."""
    if m.n != n:
        raise ValueError(f"dimension mismatch: matrix is {m.n}x{m.n}, algebra has n={n}")
    if name == "gl_n_H":
        return True
    if name == "sl_n_H":
        return m.re_trace() == 0
    if name == "sk_n_C":
        return _is_plain(m) and m.trace().z1.re == 0
    if name == "sl_n_C":
        return _is_plain(m) and m.trace().is_zero()
    if name == "u_n":
        return _is_plain(m) and (m.conj_transpose() + m).is_zero()
    if name == "so_n_C":
        return _is_plain(m) and _plain_transpose_sum_zero(m)
    if name == "so_star_2n":
        return (quat_transpose_mj(m) + m).is_zero()
    if name == "sp_n":
        return (m.conj_transpose() + m).is_zero()
    raise ValueError(f"unknown algebra name {name!r}")


def _is_plain(m: QuatMatrix) -> bool:
    return all(a.z2.is_zero() for row in m.rows for a in row)


def _plain_transpose_sum_zero(m: QuatMatrix) -> bool:
    n = m.n
    return all(
        (m.rows[p][q].z1 + m.rows[q][p].z1).is_zero()
        for p in range(n)
        for q in range(n)
    )


def is_sl_r_plus_j_gl_r(m: QuatMatrix) -> bool:
    """Membership in sl(n,R) + J gl(n,R): both components real, plain part traceless.

    A bracket-closed span, invariant under the standard conjugations
    (both components are real, so tau fixes it pointwise).  Kept as a
    standalone predicate rather than a named algebra; a variant tau
    convention exists for it in the literature and is not adopted here.
    """
    for row in m.rows:
        for a in row:
            if a.z1.im or a.z2.im:
                return False
    return m.trace().z1.re == 0


# ---------------------------------------------------------------------------
# Chevalley generators
# ---------------------------------------------------------------------------


@dataclass
class ChevalleyGenerators:
    type_label: str
    rank: int
    ambient_n: int
    h: list[QuatMatrix]
    e: list[QuatMatrix]
    f: list[QuatMatrix]
    cartan: CartanMatrix

    def validate(self) -> None:
        """Exact generator relations against the stored Cartan matrix."""
        l = self.rank
        c = self.cartan.entries
        zero = QuatMatrix.zeros(self.ambient_n)
        for i in range(l):
            for j in range(l):
                if not bracket(self.h[i], self.h[j]).is_zero():
                    raise StructuralFailureError(f"[h{i},h{j}] != 0")
                expect = self.h[i] if i == j else zero
                if bracket(self.e[i], self.f[j]) != expect:
                    raise StructuralFailureError(f"[e{i},f{j}] != delta*h")
                if bracket(self.h[i], self.e[j]) != self.e[j].scale_rational(
                    Fraction(c[j][i])
                ):
                    raise StructuralFailureError(f"[h{i},e{j}] != c_ji e{j}")
                if bracket(self.h[i], self.f[j]) != self.f[j].scale_rational(
                    Fraction(-c[j][i])
                ):
                    raise StructuralFailureError(f"[h{i},f{j}] != -c_ji f{j}")
        for mats in (self.h, self.e, self.f):
            for m in mats:
                if not _is_plain(m):
                    raise StructuralFailureError("generator has a J component")


def _gens_type_a(l: int):
    n = l + 1
    h = [_units(n, (i, i, Q_ONE), (i + 1, i + 1, -Q_ONE)) for i in range(l)]
    e = [_unit(n, i, i + 1) for i in range(l)]
    f = [_unit(n, i + 1, i) for i in range(l)]
    return n, h, e, f


def _gens_type_b(l: int):
    # coordinates (0 | plus 1..l | minus l+1..2l); short root first
    n = 2 * l + 1
    two = Quaternion(GR_ONE * 2)
    h = [_units(n, (l, l, two), (2 * l, 2 * l, -two))]
    e = [_units(n, (l, 0, Q_ONE), (0, 2 * l, -Q_ONE))]
    f = [_units(n, (0, l, two), (2 * l, 0, -two))]
    for k in range(2, l + 1):
        p = l - k + 1  # beta_k = eps_p - eps_{p+1}
        h.append(
            _units(
                n,
                (p, p, Q_ONE),
                (p + 1, p + 1, -Q_ONE),
                (l + p, l + p, -Q_ONE),
                (l + p + 1, l + p + 1, Q_ONE),
            )
        )
        e.append(_units(n, (p, p + 1, Q_ONE), (l + p + 1, l + p, -Q_ONE)))
        f.append(_units(n, (p + 1, p, Q_ONE), (l + p, l + p + 1, -Q_ONE)))
    return n, h, e, f


def _gens_type_c(l: int):
    n = 2 * l
    h, e, f = [], [], []
    for k in range(l - 1):
        h.append(
            _units(
                n,
                (k, k, Q_ONE),
                (k + 1, k + 1, -Q_ONE),
                (l + k, l + k, -Q_ONE),
                (l + k + 1, l + k + 1, Q_ONE),
            )
        )
        e.append(_units(n, (k, k + 1, Q_ONE), (l + k + 1, l + k, -Q_ONE)))
        f.append(_units(n, (k + 1, k, Q_ONE), (l + k, l + k + 1, -Q_ONE)))
    h.append(_units(n, (l - 1, l - 1, Q_ONE), (2 * l - 1, 2 * l - 1, -Q_ONE)))
    e.append(_unit(n, l - 1, 2 * l - 1))
    f.append(_unit(n, 2 * l - 1, l - 1))
    return n, h, e, f


def _gens_type_d(l: int):
    n = 2 * l
    h, e, f = [], [], []
    for k in range(l - 1):
        h.append(
            _units(
                n,
                (k, k, Q_ONE),
                (k + 1, k + 1, -Q_ONE),
                (l + k, l + k, -Q_ONE),
                (l + k + 1, l + k + 1, Q_ONE),
            )
        )
        e.append(_units(n, (k, k + 1, Q_ONE), (l + k + 1, l + k, -Q_ONE)))
        f.append(_units(n, (k + 1, k, Q_ONE), (l + k, l + k + 1, -Q_ONE)))
    # last root eps_{l-1} + eps_l
    h.append(
        _units(
            n,
            (l - 2, l - 2, Q_ONE),
            (l - 1, l - 1, Q_ONE),
            (2 * l - 2, 2 * l - 2, -Q_ONE),
            (2 * l - 1, 2 * l - 1, -Q_ONE),
        )
    )
    e.append(_units(n, (l - 1, 2 * l - 2, Q_ONE), (l - 2, 2 * l - 1, -Q_ONE)))
    f.append(_units(n, (2 * l - 2, l - 1, Q_ONE), (2 * l - 1, l - 2, -Q_ONE)))
    return n, h, e, f


_GEN_BUILDERS = {"A": _gens_type_a, "B": _gens_type_b, "C": _gens_type_c, "D": _gens_type_d}


def chevalley_generators(type_label: str, rank: int) -> ChevalleyGenerators:
    cm = cartan_matrix(type_label, rank)  # validates type and rank bounds
    n, h, e, f = _GEN_BUILDERS[type_label](rank)
    if n > MAX_AMBIENT_N:
        raise ValueError(
            f"{type_label}{rank} needs ambient n={n}, beyond the supported cap"
        )
    gens = ChevalleyGenerators(
        type_label=type_label, rank=rank, ambient_n=n, h=h, e=e, f=f, cartan=cm
    )
    gens.validate()
    return gens
