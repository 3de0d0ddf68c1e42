"""First and second cohomology dimensions for rank-2 dihedral actions.

Everything reduces to fixed points of modules in odd characteristic:
for the semidirect product of the plane (acted on through theta_i0, the
contragredient convention) with the dihedral group, and coefficients in
the adjoint of a 2-dim irreducible V = V_j,

    d1 = dim (V_phi~ (x) V* (x) V)^G
    d2 = d1 + dim (V_det.phi~ (x) V* (x) V)^G

where phi~ is the contragredient of theta_i0 and det.phi~ is its
determinant character (the sign character).  Fixed-point dimensions are
computed as the rank of the averaging idempotent, which is exact for
any multiplicity.

A second, independent route recomputes d1 from scratch: 1-cocycles of
the finitely presented semidirect product with values in the 2x2 matrix
module, solved as a linear system over F_p in the values on the four
generators.  It shares nothing with the fixed-point path beyond the
representation matrices themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dihedral import (
    DihedralParams,
    GroupElement,
    Rep2,
    RepLabel,
    induced_rep,
    irr2_rep,
    t_map,
)
from .ffield import FpMatrix, LimitExceeded

H1_ORACLE_GROUP_ORDER_LIMIT = 10**4


@dataclass(frozen=True)
class GModule:
    """A module over the dihedral group of order 2n, given by the action
    of the two generators.  Construction checks the defining relations."""

    n: int
    p: int
    dim: int
    mat_r: FpMatrix
    mat_s: FpMatrix

    def __post_init__(self) -> None:
        ident = FpMatrix.identity(self.p, self.dim)
        if self.mat_r.rows != self.dim or self.mat_s.rows != self.dim:
            raise ValueError("generator matrix has wrong dimension")
        if self.mat_r ** self.n != ident:
            raise ValueError("rotation matrix does not have order dividing n")
        if self.mat_s ** 2 != ident:
            raise ValueError("reflection matrix does not square to 1")
        if self.mat_s * self.mat_r * self.mat_s != self.mat_r.inverse():
            raise ValueError("generator matrices do not satisfy the dihedral relation")

    def matrix(self, g: GroupElement) -> FpMatrix:
        m = self.mat_r ** g.rot
        if g.flip:
            m = self.mat_s * m
        return m

    def trace(self, g: GroupElement) -> int:
        return self.matrix(g).trace()


def rep_module(rep: Rep2) -> GModule:
    return GModule(rep.params.n, rep.params.p, 2, rep.mat_r, rep.mat_s)


def trivial_module(params: DihedralParams, dim: int = 1) -> GModule:
    ident = FpMatrix.identity(params.p, dim)
    return GModule(params.n, params.p, dim, ident, ident)


def sign_module(params: DihedralParams) -> GModule:
    one = FpMatrix(params.p, ((1,),))
    return GModule(params.n, params.p, 1, one, FpMatrix(params.p, ((-1,),)))


def module_for_label(params: DihedralParams, label: RepLabel) -> GModule:
    if label.kind == "irr2":
        return rep_module(irr2_rep(params, label.index))
    if label.kind == "ind":
        return rep_module(induced_rep(params, label.index))
    if label.kind == "triv":
        return trivial_module(params)
    if label.kind == "sign":
        return sign_module(params)
    raise ValueError(f"unknown label kind {label.kind!r}")


def contragredient(m: GModule) -> GModule:
    """Dual module: each generator acts by transpose inverse."""
    return GModule(
        m.n,
        m.p,
        m.dim,
        m.mat_r.inverse().transpose(),
        m.mat_s.inverse().transpose(),
    )


def tensor(a: GModule, b: GModule) -> GModule:
    if a.n != b.n or a.p != b.p:
        raise ValueError("modules over different groups or fields")
    return GModule(a.n, a.p, a.dim * b.dim, a.mat_r.kron(b.mat_r), a.mat_s.kron(b.mat_s))


def det_module(m: GModule) -> GModule:
    """One-dimensional module through the determinant of the action."""
    return GModule(
        m.n,
        m.p,
        1,
        FpMatrix(m.p, ((m.mat_r.det(),),)),
        FpMatrix(m.p, ((m.mat_s.det(),),)),
    )


def adjoint_module(m: GModule) -> GModule:
    """V* (x) V, the conjugation action on Hom(V, V)."""
    return tensor(contragredient(m), m)


def fixed_point_dim(m: GModule) -> int:
    """Dimension of the invariants, as the rank of the averaging idempotent.

    The group sum factors as (1 + S) . sum_a R^a, which is the same 2n
    matrices added in a cheaper order.
    """
    p = m.p
    acc = FpMatrix.zeros(p, m.dim, m.dim)
    cur = FpMatrix.identity(p, m.dim)
    for _ in range(m.n):
        acc = acc + cur
        cur = cur * m.mat_r
    total = acc + m.mat_s * acc
    proj = pow(2 * m.n % p, -1, p) * total
    return proj.rank()


@dataclass(frozen=True)
class CohomologyDims:
    d1: int
    d2: int


@lru_cache(maxsize=None)
def dims(params: DihedralParams, i0: int, j: int) -> CohomologyDims:
    """d1 and d2 for the action of theta_i0 on the plane with adjoint
    coefficients coming from theta_j."""
    v = rep_module(irr2_rep(params, j))
    adj = adjoint_module(v)
    phi_tilde = contragredient(rep_module(irr2_rep(params, i0)))
    d1 = fixed_point_dim(tensor(phi_tilde, adj))
    wedge = det_module(phi_tilde)
    d2 = d1 + fixed_point_dim(tensor(wedge, adj))
    return CohomologyDims(d1, d2)


def adjoint_decomposition_check(params: DihedralParams, i: int) -> bool:
    """Confirm V* (x) V splits as trivial + sign + induced-square.

    Checks the character identity on all 2n elements and the three
    explicit stable spans: the identity matrix (trivial), diag(1, -1)
    (sign), and the pair of off-diagonal elementary matrices which the
    rotation scales by w^(2i) and w^(-2i) and the reflection swaps.
    """
    rep = irr2_rep(params, i)
    adj = adjoint_module(rep_module(rep))
    triv = trivial_module(params)
    sgn = sign_module(params)
    tmod = module_for_label(params, t_map(params, i))
    p = params.p
    from .dihedral import group_elements

    for g in group_elements(params.n):
        if adj.trace(g) != (triv.trace(g) + sgn.trace(g) + tmod.trace(g)) % p:
            return False

    mr, ms = rep.mat_r, rep.mat_s
    mr_inv, ms_inv = mr.inverse(), ms.inverse()
    ident = FpMatrix.identity(p, 2)
    diag = FpMatrix.diagonal(p, (1, -1))
    upper = FpMatrix(p, ((0, 1), (0, 0)))
    lower = FpMatrix(p, ((0, 0), (1, 0)))
    w2 = pow(params.omega, 2 * i, p)
    w2_inv = pow(w2, -1, p)
    return (
        mr * ident * mr_inv == ident
        and ms * ident * ms_inv == ident
        and mr * diag * mr_inv == diag
        and ms * diag * ms_inv == -diag
        and mr * upper * mr_inv == w2 * upper
        and mr * lower * mr_inv == w2_inv * lower
        and ms * upper * ms_inv == lower
        and ms * lower * ms_inv == upper
    )


def cohomologically_maximal_set(params: DihedralParams, i0: int) -> frozenset[int]:
    """Indices j whose d2 attains the maximum over all 2-dim irreducibles."""
    table = {j: dims(params, i0, j).d2 for j in params.irr2_indices()}
    top = max(table.values())
    return frozenset(j for j, v in table.items() if v == top)


_GEN_ORDER = ("a", "b", "r", "s")


def _conjugation_operator(mat: FpMatrix) -> FpMatrix:
    """X -> mat . X . mat^-1 on 2x2 matrices, in the basis E11, E12, E21, E22."""
    p = mat.p
    inv = mat.inverse()
    cols = []
    for pos in ((0, 0), (0, 1), (1, 0), (1, 1)):
        basis = FpMatrix(
            p, [[1 if (rr, cc) == pos else 0 for cc in range(2)] for rr in range(2)]
        )
        y = mat * basis * inv
        cols.append((y.data[0][0], y.data[0][1], y.data[1][0], y.data[1][1]))
    return FpMatrix(p, tuple(tuple(cols[c][r] for c in range(4)) for r in range(4)))


def d1_oracle_cocycles(params: DihedralParams, i0: int, j: int) -> int:
    """d1 recomputed from 1-cocycles of the presented semidirect product.

    Generators: a, b for the two plane coordinates, r, s for the group.
    Relators: a^p, b^p, [a, b], r^n, s^2, (s r)^2, and one conjugation
    relator per (group generator, plane generator) pair whose exponents
    are read off the columns of the theta_i0 matrix.  A cocycle is
    determined by its four generator values in the 2x2 matrix module M
    (16 unknowns); each relator contributes the linear condition that
    its cocycle expansion vanishes.  Then

        d1 = dim Z1 - (dim M - dim M^G).
    """
    n, p = params.n, params.p
    if 2 * n * p * p > H1_ORACLE_GROUP_ORDER_LIMIT:
        raise LimitExceeded(
            f"group order {2 * n * p * p} exceeds oracle limit {H1_ORACLE_GROUP_ORDER_LIMIT}"
        )
    action_rep = irr2_rep(params, i0)
    module_rep = irr2_rep(params, j)

    ident4 = FpMatrix.identity(p, 4)
    operator = {
        "a": ident4,
        "b": ident4,
        "r": _conjugation_operator(module_rep.mat_r),
        "s": _conjugation_operator(module_rep.mat_s),
    }
    operator_inv = {sym: op.inverse() for sym, op in operator.items()}

    def conjugation_relator(gsym: str, xsym: str) -> list[tuple[str, int]]:
        mat = action_rep.mat_r if gsym == "r" else action_rep.mat_s
        col = 0 if xsym == "a" else 1
        ca, cb = mat.data[0][col], mat.data[1][col]
        return [(gsym, 1), (xsym, 1), (gsym, -1), ("b", -cb), ("a", -ca)]

    relators = [
        [("a", p)],
        [("b", p)],
        [("a", 1), ("b", 1), ("a", -1), ("b", -1)],
        [("r", n)],
        [("s", 2)],
        [("s", 1), ("r", 1), ("s", -1), ("r", 1)],
        conjugation_relator("r", "a"),
        conjugation_relator("r", "b"),
        conjugation_relator("s", "a"),
        conjugation_relator("s", "b"),
    ]

    zero4 = FpMatrix.zeros(p, 4, 4)
    rows = []
    for rel in relators:
        coeff = {sym: zero4 for sym in _GEN_ORDER}
        prefix = ident4
        for sym, e in rel:
            if e >= 0:
                for _ in range(e):
                    coeff[sym] = coeff[sym] + prefix
                    prefix = prefix * operator[sym]
            else:
                for _ in range(-e):
                    prefix = prefix * operator_inv[sym]
                    coeff[sym] = coeff[sym] - prefix
        for rix in range(4):
            rows.append(tuple(v for sym in _GEN_ORDER for v in coeff[sym].data[rix]))

    system = FpMatrix(p, rows)
    z1 = 16 - system.rank()
    gen_rows = [
        row
        for op in (operator["r"], operator["s"])
        for row in (op - ident4).data
    ]
    m_fixed = 4 - FpMatrix(p, gen_rows).rank()
    return z1 - (4 - m_fixed)
