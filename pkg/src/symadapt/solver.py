"""Simultaneous eigenvalue refinement along the subgroup chain.

resolve() splits the orbit space into joint integer eigenspaces of the
class-sum operators C(n), ..., C(2), then lifts any remaining multiplicity
with state-permutation operators.  Every one-dimensional piece becomes a
labeled basis vector: its eigenvalue chain, the standard Young tableau the
chain encodes, and exact integer coefficients c with an implied overall
factor 1/sqrt(norm_sq).  The coefficient table read off this basis is the
coupling-coefficient table of the configuration.

All the chain operators commute with one another, so the refinement is
computed cheapest-first (ascending k, where the early splits are nearly
free) and the resulting partition is identical to refining from C(n)
downwards; leaves are then labeled and ordered in the descending-chain
convention.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .configs import OrbitBasis
from .linalg import (
    NotInvariantError,
    Subspace,
    candidate_eigenvalues,
    eigenrows_of_block,
    intersect,
    kernel,
    restrict_apply,
    row_to_int,
)
from .operators import (
    apply_maps,
    element_maps,
    ket_map,
    maps_to_matrix,
    normalize_state_pairs,
    state_maps,
)
from .perm import Permutation, subgroup_transpositions, transposition
from .young import StandardTableau, tableau_from_chain

StateOp = tuple[tuple[int, int], ...]


class InternalCheckError(RuntimeError):
    """An internal invariance or dimension-count check failed; this signals
    an implementation bug, not a user error."""


@dataclass(frozen=True)
class LabelChain:
    """Eigenvalue labels of one basis vector.

    ``nu`` holds (nu_n, ..., nu_2), the class-sum eigenvalues down the
    subgroup chain; ``state_labels`` holds the eigenvalues of the state
    operators that were applied, in application order.
    """

    nu: tuple[int, ...]
    state_labels: tuple[int, ...]


@dataclass(frozen=True)
class LabeledVector:
    """One symmetry-adapted basis vector with exact radical coefficients.

    The actual coefficient on basis ket i is coeffs[i] / sqrt(norm_sq);
    coeffs is primitive (gcd 1) with its first nonzero entry positive.
    Vectors from a degeneracy that no operator managed to lift carry
    tag == "unlabeled".
    """

    chain: LabelChain
    tableau: StandardTableau
    tag: str | None
    coeffs: tuple[int, ...]
    norm_sq: int


@dataclass(frozen=True)
class CGTable:
    """The resolved basis of one orbit: vector count always equals orbit size."""

    basis: OrbitBasis
    vectors: tuple[LabeledVector, ...]
    state_ops: tuple[StateOp, ...]
    skipped_state_ops: tuple[StateOp, ...]
    complete: bool

    @property
    def configuration(self) -> tuple[int, ...]:
        return self.basis.seed


def normalize(vec: Sequence) -> tuple[tuple[int, ...], int]:
    """Clear denominators, divide by the gcd, make the first nonzero entry
    positive, and return (coeffs, sum of squares)."""
    fracs = [Fraction(x) for x in vec]
    if not any(fracs):
        raise ValueError("cannot normalize the zero vector")
    ints = row_to_int(fracs)
    g = 0
    for a in ints:
        g = gcd(g, a)
    ints = [a // g for a in ints]
    lead = next(a for a in ints if a)
    if lead < 0:
        ints = [-a for a in ints]
    return tuple(ints), sum(a * a for a in ints)


def default_state_ops(basis: OrbitBasis) -> list[StateOp]:
    """The automatic degeneracy lifters: one state transposition per pair of
    states with equal (nonzero) multiplicity, in lexicographic label order."""
    labels = basis.alphabet.labels
    mults = basis.multiplicities()
    pairs = [
        (i, j)
        for i in range(len(labels))
        for j in range(i + 1, len(labels))
        if mults[i] == mults[j] and mults[i] > 0
    ]
    pairs.sort(key=lambda p: (labels[p[0]], labels[p[1]]))
    return [((i, j),) for i, j in pairs]


@dataclass
class _Leaf:
    space: Subspace
    nu_asc: tuple[int, ...]
    state_labels: tuple[int, ...]
    remainder: bool = False


def _lift(coord_rows: Sequence[Sequence[Fraction]], space: Subspace) -> Subspace:
    """Map rows of coordinates in ``space``'s basis back to ambient rows."""
    zrows = space.int_rows
    leads = [zr[p] for zr, p in zip(zrows, space.pivots)]
    out = []
    for crow in coord_rows:
        c_int = row_to_int(crow)
        scale = 1
        for cj, lead in zip(c_int, leads):
            if cj:
                scale = lcm(scale, lead)
        acc = [0] * space.ambient
        for cj, lead, zr in zip(c_int, leads, zrows):
            if cj:
                f = cj * (scale // lead)
                for t, v in enumerate(zr):
                    if v:
                        acc[t] += f * v
        out.append(acc)
    return Subspace.from_rows(space.ambient, out)


def _split(
    space: Subspace, maps: Sequence[tuple[int, ...]], cands: Sequence[int], label: str
) -> tuple[list[tuple[int, Subspace]], int]:
    """Split an invariant subspace into integer eigenspaces of an operator.

    Returns the (eigenvalue, subspace) children in candidate order plus the
    total dimension found; callers decide whether a shortfall is legal.
    """
    if space.dim == space.ambient:
        block: tuple = maps_to_matrix(maps, space.ambient)
    else:
        block = restrict_apply(lambda v: apply_maps(maps, v), space, label)
    children = []
    total = 0
    for nu in cands:
        rows = eigenrows_of_block(block, nu)
        if rows:
            sub = _lift(rows, space) if space.dim != space.ambient else _canonical(space.ambient, rows)
            children.append((nu, sub))
            total += sub.dim
    return children, total


def _canonical(ambient: int, rows: tuple) -> Subspace:
    pivots = tuple(next(t for t, x in enumerate(r) if x) for r in rows)
    return Subspace(ambient, rows, pivots)


def _orthogonal_remainder(space: Subspace, children: list[tuple[int, Subspace]]) -> Subspace:
    stacked = [row for _, sub in children for row in sub.rows]
    comp_rows = kernel(stacked, space.ambient)
    return intersect(space, _canonical(space.ambient, comp_rows))


def _gram_schmidt(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    basis: list[list[Fraction]] = []
    for row in rows:
        v = [Fraction(x) for x in row]
        for b in basis:
            num = sum(x * y for x, y in zip(v, b))
            if num:
                den = sum(y * y for y in b)
                f = num / den
                v = [x - f * y for x, y in zip(v, b)]
        basis.append(v)
    return basis


def resolve(basis: OrbitBasis, state_ops: Sequence[Sequence[Sequence[int]]] | None = None) -> CGTable:
    """Resolve an orbit into labeled symmetry-adapted basis vectors.

    ``state_ops`` is an ordered list of state operators, each a list of
    alphabet transpositions (index pairs) whose matrices are summed.  When
    none are supplied and degeneracy remains after the chain, default
    operators are tried one at a time (see default_state_ops) until the
    degeneracy clears or the options run out.

    A state operator refines the table only if every current leaf is
    invariant under it (operators after the first need not commute with
    the earlier ones); non-invariant operators are recorded as skipped.
    Every applied operator labels every leaf, so complete tables have one
    state eigenvalue per applied operator on every vector.  Leaves that
    stay degenerate are emitted as an orthogonalized basis tagged
    "unlabeled" and the table's ``complete`` flag drops to False.
    """
    n = basis.degree
    d = len(basis)
    leaves = [_Leaf(Subspace.full(d), (), ())]
    for k in range(2, n + 1):
        maps = element_maps(subgroup_transpositions(k, n), basis)
        cands = candidate_eigenvalues(k)
        new_leaves = []
        for leaf in leaves:
            try:
                children, total = _split(leaf.space, maps, cands, f"C({k})")
            except NotInvariantError as exc:
                raise InternalCheckError(
                    f"C({k}) failed to leave a chain eigenspace invariant"
                ) from exc
            if total != leaf.space.dim:
                raise InternalCheckError(
                    f"C({k}) eigenspace dimensions sum to {total}, expected {leaf.space.dim}"
                )
            for nu, sub in children:
                new_leaves.append(_Leaf(sub, leaf.nu_asc + (nu,), ()))
        leaves = new_leaves
    leaves.sort(key=lambda lf: tuple(reversed(lf.nu_asc)), reverse=True)

    if state_ops:
        ops_queue = [normalize_state_pairs(op, basis) for op in state_ops]
        auto = False
    else:
        ops_queue = default_state_ops(basis)
        auto = True
    applied: list[StateOp] = []
    skipped: list[StateOp] = []
    for op in ops_queue:
        if auto and not any(lf.space.dim > 1 and not lf.remainder for lf in leaves):
            break
        maps = state_maps(op, basis)
        terms = len(op)
        cands = tuple(range(terms, -terms - 1, -1))
        label = _state_op_text(op, basis)
        blocks: list[tuple | None] = []
        invariant = True
        for leaf in leaves:
            if leaf.remainder:
                blocks.append(None)
                continue
            if leaf.space.dim == leaf.space.ambient:
                blocks.append(maps_to_matrix(maps, d))
                continue
            try:
                blocks.append(restrict_apply(lambda v: apply_maps(maps, v), leaf.space, label))
            except NotInvariantError:
                invariant = False
                break
        if not invariant:
            skipped.append(op)
            continue
        new_leaves = []
        for leaf, block in zip(leaves, blocks):
            if leaf.remainder:
                new_leaves.append(leaf)
                continue
            children = []
            total = 0
            for c in cands:
                rows = eigenrows_of_block(block, c)
                if rows:
                    sub = _lift(rows, leaf.space) if leaf.space.dim != d else _canonical(d, rows)
                    children.append((c, sub))
                    total += sub.dim
            if total > leaf.space.dim:
                raise InternalCheckError(f"{label}: eigenspaces overfill the leaf")
            for c, sub in children:
                new_leaves.append(_Leaf(sub, leaf.nu_asc, leaf.state_labels + (c,)))
            if total < leaf.space.dim:
                # the operator has irrational eigenvalues on the rest of this
                # leaf; freeze it so later labels stay aligned
                rem = _orthogonal_remainder(leaf.space, children)
                if rem.dim != leaf.space.dim - total:
                    raise InternalCheckError(f"{label}: remainder dimension mismatch")
                new_leaves.append(
                    _Leaf(rem, leaf.nu_asc, leaf.state_labels, remainder=True)
                )
        leaves = new_leaves
        applied.append(op)

    vectors: list[LabeledVector] = []
    for leaf in leaves:
        chain = LabelChain(tuple(reversed(leaf.nu_asc)), leaf.state_labels)
        try:
            tableau = tableau_from_chain(chain.nu)
        except ValueError as exc:
            raise InternalCheckError(f"unrealizable chain {chain.nu} emerged") from exc
        if leaf.space.dim == 1:
            coeffs, norm_sq = normalize(leaf.space.rows[0])
            vectors.append(LabeledVector(chain, tableau, None, coeffs, norm_sq))
        else:
            for row in _gram_schmidt(leaf.space.rows):
                coeffs, norm_sq = normalize(row)
                vectors.append(LabeledVector(chain, tableau, "unlabeled", coeffs, norm_sq))
    complete = all(v.tag is None for v in vectors)
    return CGTable(
        basis=basis,
        vectors=tuple(vectors),
        state_ops=tuple(applied),
        skipped_state_ops=tuple(skipped),
        complete=complete,
    )


def _state_op_text(op: StateOp, basis: OrbitBasis) -> str:
    labels = basis.alphabet.labels
    return "+".join(f"({labels[s]} {labels[t]})" for s, t in op)


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # PASS, FAIL or WARN
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != "FAIL" for c in self.checks)

    def lines(self) -> list[str]:
        return [
            f"{c.status} {c.name}" + (f": {c.detail}" if c.detail else "")
            for c in self.checks
        ]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def verify_table(table: CGTable) -> VerifyReport:
    """Exact self-verification of a resolved table.

    Checks unit norms and normalization conventions, pairwise
    orthogonality, every recorded eigen-equation, the telescoped
    chain-difference equations (the Jucys-Murphy consistency
    (C(j) - C(j-1)) v = (nu_j - nu_{j-1}) v), and completeness.  An
    honestly flagged incomplete table yields a warning, not a failure.
    """
    basis = table.basis
    n = basis.degree
    d = len(basis)
    vecs = table.vectors
    checks: list[Check] = []

    bad_norm = []
    for i, v in enumerate(vecs):
        g = 0
        for c in v.coeffs:
            g = gcd(g, c)
        lead = next((c for c in v.coeffs if c), 0)
        if (
            len(v.coeffs) != d
            or v.norm_sq <= 0
            or sum(c * c for c in v.coeffs) != v.norm_sq
            or g != 1
            or lead <= 0
        ):
            bad_norm.append(i)
    checks.append(
        Check("unit_norm", "PASS" if not bad_norm else "FAIL",
              "" if not bad_norm else f"vectors {bad_norm} break the normalization contract")
    )

    bad_pairs = [
        (i, j)
        for i in range(len(vecs))
        for j in range(i + 1, len(vecs))
        if _dot(vecs[i].coeffs, vecs[j].coeffs) != 0
    ]
    checks.append(
        Check("orthogonality", "PASS" if not bad_pairs else "FAIL",
              "" if not bad_pairs else f"non-orthogonal pairs {bad_pairs[:5]}")
    )

    failures = []
    chain_maps = {
        k: element_maps(subgroup_transpositions(k, n), basis) for k in range(2, n + 1)
    }
    op_maps = [state_maps(op, basis) for op in table.state_ops]
    for i, v in enumerate(vecs):
        for k in range(2, n + 1):
            nu_k = v.chain.nu[n - k]
            if apply_maps(chain_maps[k], v.coeffs) != [nu_k * c for c in v.coeffs]:
                failures.append((i, f"C({k})"))
        for idx, lab in enumerate(v.chain.state_labels):
            if apply_maps(op_maps[idx], v.coeffs) != [lab * c for c in v.coeffs]:
                failures.append((i, f"state op {idx}"))
    checks.append(
        Check("eigen_equations", "PASS" if not failures else "FAIL",
              "" if not failures else f"failed equations {failures[:5]}")
    )

    jm_failures = []
    jm_maps = {
        j: element_maps(
            [transposition(i, j, n) for i in range(1, j)], basis
        )
        for j in range(2, n + 1)
    }
    for i, v in enumerate(vecs):
        for j in range(2, n + 1):
            nu_j = v.chain.nu[n - j]
            nu_prev = v.chain.nu[n - j + 1] if j > 2 else 0
            content = nu_j - nu_prev
            if apply_maps(jm_maps[j], v.coeffs) != [content * c for c in v.coeffs]:
                jm_failures.append((i, j))
    checks.append(
        Check("jucys_murphy", "PASS" if not jm_failures else "FAIL",
              "" if not jm_failures else f"failed differences {jm_failures[:5]}")
    )

    flagged = any(v.tag is not None for v in vecs)
    if len(vecs) != d or table.complete == flagged:
        checks.append(
            Check("completeness", "FAIL",
                  f"{len(vecs)} vectors for orbit size {d}; complete flag {table.complete}")
        )
    elif table.complete:
        checks.append(Check("completeness", "PASS"))
    else:
        unlabeled = sum(1 for v in vecs if v.tag is not None)
        checks.append(
            Check("completeness", "WARN",
                  f"{unlabeled} of {len(vecs)} vectors left unlabeled (flagged residue)")
        )
    return VerifyReport(tuple(checks))


def block_structure_check(table: CGTable, elements: Sequence[Permutation]) -> Check:
    """Every group element must act block-diagonally on the resolved basis:
    no matrix element may connect vectors of different shapes or different
    state-label records.

    For each transformed vector the exact Parseval identity over its own
    block is asserted; for small tables every cross-block entry is also
    checked to be zero directly.
    """
    vecs = table.vectors
    d = len(table.basis)
    groups: dict[tuple, list[int]] = {}
    for i, v in enumerate(vecs):
        groups.setdefault((v.tableau.shape, v.chain.state_labels), []).append(i)
    direct = d <= 32
    for g in elements:
        sigma = ket_map(g, table.basis)
        for i, v in enumerate(vecs):
            image = [0] * d
            for j, c in enumerate(v.coeffs):
                image[sigma[j]] = c
            mates = groups[(v.tableau.shape, v.chain.state_labels)]
            projected = sum(
                Fraction(_dot(image, vecs[b].coeffs) ** 2, vecs[b].norm_sq)
                for b in mates
            )
            if projected != v.norm_sq:
                return Check(
                    "block_structure", "FAIL",
                    f"{g} maps vector {i} outside its (shape, state-label) block",
                )
            if direct:
                for b, w in enumerate(vecs):
                    if b not in mates and _dot(image, w.coeffs) != 0:
                        return Check(
                            "block_structure", "FAIL",
                            f"{g} connects vectors {i} and {b} across blocks",
                        )
    return Check("block_structure", "PASS")


__all__ = [
    "InternalCheckError",
    "LabelChain",
    "LabeledVector",
    "CGTable",
    "StateOp",
    "normalize",
    "default_state_ops",
    "resolve",
    "verify_table",
    "VerifyReport",
    "Check",
    "block_structure_check",
]
