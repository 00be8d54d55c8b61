"""Cartan matrices of the classical finite types, positive roots, weights.

Index convention: the stored matrix satisfies ``[h_i, e_j] = c_ji e_j``
for the matching generator realization, i.e. ``c_ij`` is the value of
the i-th simple root on the j-th coroot.  Conventions in the literature
differ from this one by a transpose; every formula in this package
pairs a root with coroots by summing ``coeffs[k] * c[k][j]`` over k.

For type B the short simple root is listed first, which is what makes
the relation above produce ``[[2, -1], [-2, 2]]`` at rank 2.
"""

from __future__ import annotations

from dataclasses import dataclass

CLASSICAL_TYPES = ("A", "B", "C", "D")

# rank -> count of positive roots, used as a cross-check after generation
POSITIVE_COUNTS = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
}

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class CartanMatrix:
    type_label: str | None
    rank: int
    entries: tuple  # tuple of tuples of int

    def pairing(self, coeffs, j: int) -> int:
        """Value of the root with the given simple-root coefficients on coroot j."""
        return sum(coeffs[k] * self.entries[k][j] for k in range(self.rank))

    def is_singular(self) -> bool:
        return _int_det(self.entries) == 0


def _int_det(entries) -> int:
    """Determinant by fraction-free expansion; matrices here are tiny."""
    size = len(entries)
    if size == 1:
        return entries[0][0]
    total = 0
    sign = 1
    for col in range(size):
        minor = tuple(
            tuple(row[c] for c in range(size) if c != col) for row in entries[1:]
        )
        total += sign * entries[0][col] * _int_det(minor)
        sign = -sign
    return total


def _validate_gcm(entries) -> None:
    size = len(entries)
    for i in range(size):
        if len(entries[i]) != size:
            raise ValueError("Cartan matrix must be square")
        if entries[i][i] != 2:
            raise ValueError("diagonal Cartan entries must equal 2")
        for j in range(size):
            if i != j:
                if entries[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (entries[i][j] == 0) != (entries[j][i] == 0):
                    raise ValueError("zero pattern must be symmetric")


def custom_cartan(entries) -> CartanMatrix:
    """Generalized Cartan matrix without a type label (used by mutation tests)."""
    entries = tuple(tuple(int(v) for v in row) for row in entries)
    _validate_gcm(entries)
    return CartanMatrix(type_label=None, rank=len(entries), entries=entries)


def cartan_matrix(type_label: str, rank: int) -> CartanMatrix:
    if type_label not in CLASSICAL_TYPES:
        raise ValueError(f"unknown type {type_label!r}; expected one of A, B, C, D")
    if rank < MIN_RANK[type_label]:
        raise ValueError(f"type {type_label} needs rank >= {MIN_RANK[type_label]}")
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2
    if type_label == "A":
        for i in range(rank - 1):
            c[i][i + 1] = c[i + 1][i] = -1
    elif type_label == "B":
        # short root first: the chain pairs -1 except the short root's
        # doubled coroot, giving c[1][0] = -2
        for i in range(rank - 1):
            c[i][i + 1] = c[i + 1][i] = -1
        c[1][0] = -2
    elif type_label == "C":
        # long root last: its coroot is halved, giving c[rank-1][rank-2] = -2
        for i in range(rank - 1):
            c[i][i + 1] = c[i + 1][i] = -1
        c[rank - 1][rank - 2] = -2
    elif type_label == "D":
        for i in range(rank - 2):
            c[i][i + 1] = c[i + 1][i] = -1
        c[rank - 1][rank - 3] = c[rank - 3][rank - 1] = -1
    entries = tuple(tuple(row) for row in c)
    _validate_gcm(entries)
    return CartanMatrix(type_label=type_label, rank=rank, entries=entries)


@dataclass(frozen=True)
class Root:
    """Integer coordinates in the simple-root basis, all >= 0 or all <= 0."""

    coeffs: tuple

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    @property
    def height(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True)
class Weight:
    """Values on the coroots: ``values[j] = sum_k coeffs[k] * c[k][j]``."""

    values: tuple

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.values))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)


def weight_of(root: Root, cm: CartanMatrix) -> Weight:
    return Weight(tuple(cm.pairing(root.coeffs, j) for j in range(cm.rank)))


def simple_root(cm: CartanMatrix, i: int) -> Root:
    return Root(tuple(1 if k == i else 0 for k in range(cm.rank)))


@dataclass(frozen=True)
class RootTreeNode:
    root: Root
    parent: int | None  # index of the root this one was grown from
    simple: int | None  # which simple root was added


def positive_roots_with_tree(cm: CartanMatrix) -> list[RootTreeNode]:
    """Positive roots by root-string closure, with the growth tree.

    A candidate ``beta + alpha_i`` is a root exactly when ``p -
    <beta, alpha_i^vee> > 0`` where p is the length of the alpha_i-string
    below beta.  Generation proceeds by height, so the full down-string
    is always known.  Non-finite-type matrices trip a divergence guard.
    """
    l = cm.rank
    cap = 10 * l * l
    nodes = [RootTreeNode(simple_root(cm, i), None, None) for i in range(l)]
    index: dict[tuple, int] = {node.root.coeffs: k for k, node in enumerate(nodes)}
    frontier = list(range(l))
    while frontier:
        next_frontier: list[int] = []
        for node_idx in frontier:
            beta = nodes[node_idx].root
            for i in range(l):
                down = 0
                probe = list(beta.coeffs)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in index:
                        down += 1
                    else:
                        break
                if down - cm.pairing(beta.coeffs, i) <= 0:
                    continue
                grown = list(beta.coeffs)
                grown[i] += 1
                key = tuple(grown)
                if key in index:
                    continue
                index[key] = len(nodes)
                nodes.append(RootTreeNode(Root(key), node_idx, i))
                next_frontier.append(index[key])
                if len(nodes) > cap:
                    raise ValueError(
                        "root generation exceeded the finite-type bound; "
                        "the matrix is not of finite type"
                    )
        frontier = next_frontier
    expected = POSITIVE_COUNTS.get(cm.type_label)
    if expected is not None and len(nodes) != expected(l):
        raise ValueError(
            f"generated {len(nodes)} positive roots for {cm.type_label}{l}, "
            f"expected {expected(l)}"
        )
    return nodes


def positive_roots(cm: CartanMatrix) -> list[Root]:
    return [node.root for node in positive_roots_with_tree(cm)]
