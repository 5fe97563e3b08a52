"""Command-line surface: compute and print coupling-coefficient tables,
class-operator spectra, and verification reports.

    symadapt basis       --config abc [--state-ops "(a b)"] [--format json]
    symadapt eigenvalues --config abc --k 3
    symadapt verify      --config abcd

Exit codes are a stable contract: 0 on success with a complete labeling,
1 on input errors (or failed verification), 2 when a table is emitted
with honestly flagged residual degeneracy.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass

from .configs import OrbitBasis, StateAlphabet, alphabet_for, orbit, parse_ordering
from .linalg import candidate_eigenvalues, eigenspace
from .operators import class_operator, dump_matrix, element_maps, ket_map, state_maps, state_operator
from .perm import compose, random_permutation, subgroup_transpositions
from .solver import (
    CGTable,
    Check,
    StateOp,
    block_structure_check,
    resolve,
    verify_table,
)

_BLOCK_CHECK_SEED = 1729
_BLOCK_CHECK_ELEMENTS = 10


@dataclass(frozen=True)
class RunSpec:
    """Everything one invocation needs: parsed configuration, alphabet,
    optional orbit ordering, state operators, and output options."""

    config_text: str
    alphabet: StateAlphabet
    word: tuple[int, ...]
    ordering: tuple[tuple[int, ...], ...] | None
    state_ops: tuple[StateOp, ...] | None
    fmt: str
    verbose: bool


def parse_state_ops(text: str, alphabet: StateAlphabet) -> list[list[tuple[int, int]]]:
    """Parse a state-operator list: operators are comma-separated, and one
    operator is a sum of transpositions, "(a b)" or "(a b)+(a c)+(b c)"."""
    ops = []
    for op_text in text.split(","):
        op_text = op_text.strip()
        if not op_text:
            raise ValueError(f"empty state operator in {text!r}")
        pairs = []
        for term in op_text.split("+"):
            term = term.strip()
            if not (term.startswith("(") and term.endswith(")")):
                raise ValueError(
                    f"state transposition {term!r} must look like (a b); "
                    "sum transpositions with '+', separate operators with ','"
                )
            toks = term[1:-1].split()
            if len(toks) != 2:
                raise ValueError(f"state transposition {term!r} needs exactly two states")
            pairs.append((alphabet.index(toks[0]), alphabet.index(toks[1])))
        ops.append(pairs)
    return ops


def build_runspec(args: argparse.Namespace) -> RunSpec:
    alphabet = (
        StateAlphabet.from_text(args.alphabet) if args.alphabet else alphabet_for(args.config)
    )
    word = alphabet.word_from_text(args.config)
    ordering = None
    if args.order:
        with open(args.order, encoding="utf-8") as handle:
            ordering = tuple(parse_ordering(handle, alphabet))
    state_ops = None
    if args.state_ops:
        state_ops = tuple(tuple(op) for op in parse_state_ops(args.state_ops, alphabet))
    return RunSpec(
        config_text=args.config,
        alphabet=alphabet,
        word=word,
        ordering=ordering,
        state_ops=state_ops,
        fmt=args.format,
        verbose=args.verbose,
    )


def make_basis(spec: RunSpec) -> OrbitBasis:
    basis = orbit(spec.word, spec.alphabet)
    if spec.ordering is not None:
        basis = basis.with_ordering(spec.ordering)
    return basis


def _dump_operators(basis: OrbitBasis, state_ops) -> None:
    for k in range(2, basis.degree + 1):
        sys.stderr.write(dump_matrix(class_operator(k, basis), f"C({k})"))
    for i, op in enumerate(state_ops or ()):
        sys.stderr.write(dump_matrix(state_operator(op, basis), f"state_op_{i}"))


# ----------------------------- rendering -----------------------------

def coeff_text(c: int, norm_sq: int) -> str:
    """An exact radical coefficient, "c/√N"."""
    if norm_sq == 1:
        return str(c)
    return f"{c}/√{norm_sq}"


def _state_op_label(op: StateOp, alphabet: StateAlphabet) -> str:
    return "+".join(f"({alphabet.labels[s]} {alphabet.labels[t]})" for s, t in op)


def _vector_terms(vector, basis: OrbitBasis) -> str:
    parts = []
    for c, w in zip(vector.coeffs, basis.configs):
        if not c:
            continue
        mag = coeff_text(abs(c), vector.norm_sq)
        ket = f"|{basis.alphabet.text_from_word(w)}>"
        if not parts:
            parts.append(f"{'-' if c < 0 else ''}{mag} {ket}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {mag} {ket}")
    return " ".join(parts)


def _labels_text(values) -> str:
    return "(" + ",".join(str(x) for x in values) + ")"


def render_text_table(table: CGTable) -> str:
    basis = table.basis
    alpha = basis.alphabet
    lines = [
        f"group: S{basis.degree}",
        f"configuration: {alpha.text_from_word(basis.seed)}",
        "orbit: " + " ".join(basis.texts()),
    ]
    ops = ", ".join(_state_op_label(op, alpha) for op in table.state_ops)
    lines.append(f"state operators: {ops if ops else '(none)'}")
    if table.skipped_state_ops:
        skipped = ", ".join(_state_op_label(op, alpha) for op in table.skipped_state_ops)
        lines.append(f"skipped state operators (not invariant on every leaf): {skipped}")
    lines.append(f"complete: {'yes' if table.complete else 'no'}")
    for idx, v in enumerate(table.vectors, 1):
        lines.append("")
        head = f"vector {idx}: nu={_labels_text(v.chain.nu)} state={_labels_text(v.chain.state_labels)}"
        if v.tag is not None:
            head += f" [{v.tag}]"
        lines.append(head)
        lines.extend("  " + row for row in v.tableau.bracket_lines())
        lines.append("  " + _vector_terms(v, basis))
    return "\n".join(lines) + "\n"


def table_to_dict(table: CGTable) -> dict:
    basis = table.basis
    vectors = []
    for v in table.vectors:
        entry = {
            "nu": list(v.chain.nu),
            "state_eigenvalues": list(v.chain.state_labels),
            "tableau": [list(r) for r in v.tableau.rows],
            "coeffs": list(v.coeffs),
            "norm_sq": v.norm_sq,
        }
        if v.tag is not None:
            entry["tag"] = v.tag
        vectors.append(entry)
    return {
        "group": f"S{basis.degree}",
        "configuration": basis.alphabet.text_from_word(basis.seed),
        "ordering": basis.texts(),
        "vectors": vectors,
        "complete": table.complete,
    }


def canonical_json(obj) -> str:
    """The one JSON serialization used everywhere, so output round-trips
    byte-identically (insertion-ordered keys, integers only, no floats)."""
    return json.dumps(obj, indent=2) + "\n"


def render_csv_table(table: CGTable) -> str:
    basis = table.basis
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["vector_id", "nu_chain", "tableau", "ket", "coeff_numerator", "norm_sq"])
    for idx, v in enumerate(table.vectors, 1):
        nu_chain = ",".join(str(x) for x in v.chain.nu)
        tableau = json.dumps([list(r) for r in v.tableau.rows], separators=(",", ":"))
        for c, w in zip(v.coeffs, basis.configs):
            writer.writerow([idx, nu_chain, tableau, basis.alphabet.text_from_word(w), c, v.norm_sq])
    return out.getvalue()


# ----------------------------- commands -----------------------------

def cmd_basis(spec: RunSpec) -> int:
    basis = make_basis(spec)
    if spec.verbose:
        _dump_operators(basis, spec.state_ops)
    table = resolve(basis, spec.state_ops)
    if spec.fmt == "json":
        sys.stdout.write(canonical_json(table_to_dict(table)))
    elif spec.fmt == "csv":
        sys.stdout.write(render_csv_table(table))
    else:
        sys.stdout.write(render_text_table(table))
    return 0 if table.complete else 2


def spectrum(basis: OrbitBasis, k: int) -> list[tuple[int, int]]:
    """Realized eigenvalues of C(k) on the orbit with multiplicities,
    rarest first, ties broken by descending eigenvalue."""
    matrix = class_operator(k, basis)
    found = []
    total = 0
    for nu in candidate_eigenvalues(k):
        dim = eigenspace(matrix, nu).dim
        if dim:
            found.append((nu, dim))
            total += dim
    if total != len(basis):
        raise RuntimeError(
            f"eigenspace dimensions sum to {total}, expected {len(basis)}; "
            "this signals an implementation bug"
        )
    found.sort(key=lambda pair: (pair[1], -pair[0]))
    return found


def cmd_eigenvalues(spec: RunSpec, k: int) -> int:
    basis = make_basis(spec)
    if not 2 <= k <= basis.degree:
        raise ValueError(f"--k must lie in 2..{basis.degree}, got {k}")
    if spec.verbose:
        sys.stderr.write(dump_matrix(class_operator(k, basis), f"C({k})"))
    pairs = spectrum(basis, k)
    if spec.fmt == "json":
        obj = {
            "group": f"S{basis.degree}",
            "configuration": spec.alphabet.text_from_word(basis.seed),
            "k": k,
            "eigenvalues": [[nu, mult] for nu, mult in pairs],
        }
        sys.stdout.write(canonical_json(obj))
    elif spec.fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["eigenvalue", "multiplicity"])
        writer.writerows(pairs)
        sys.stdout.write(out.getvalue())
    else:
        sys.stdout.write(", ".join(f"{nu}:{mult}" for nu, mult in pairs) + "\n")
    return 0


def _module_invariant_checks(table: CGTable) -> list[Check]:
    """Deterministic extra checks run by `verify` on top of verify_table."""
    basis = table.basis
    n = basis.degree
    rng = random.Random(_BLOCK_CHECK_SEED)
    elements = [random_permutation(n, rng) for _ in range(_BLOCK_CHECK_ELEMENTS)]
    checks = [block_structure_check(table, elements)]

    bad = []
    for _ in range(5):
        p = random_permutation(n, rng)
        q = random_permutation(n, rng)
        sp, sq, spq = (ket_map(x, basis) for x in (p, q, compose(p, q)))
        if tuple(sp[j] for j in sq) != spq:
            bad.append((str(p), str(q)))
    checks.append(
        Check("representation_property", "PASS" if not bad else "FAIL",
              "" if not bad else f"M(p)M(q) != M(pq) for {bad}")
    )

    if table.state_ops:
        bad_pairs = []
        g_maps = element_maps(subgroup_transpositions(n, n), basis)
        for op in table.state_ops:
            for smap in state_maps(op, basis):
                for gmap in g_maps:
                    if tuple(smap[j] for j in gmap) != tuple(gmap[j] for j in smap):
                        bad_pairs.append(op)
        checks.append(
            Check("state_particle_commutation", "PASS" if not bad_pairs else "FAIL",
                  "" if not bad_pairs else f"non-commuting state operators {bad_pairs}")
        )
    return checks


def cmd_verify(spec: RunSpec) -> int:
    basis = make_basis(spec)
    if spec.verbose:
        _dump_operators(basis, spec.state_ops)
    table = resolve(basis, spec.state_ops)
    report = verify_table(table)
    checks = list(report.checks) + _module_invariant_checks(table)
    failed = sum(1 for c in checks if c.status == "FAIL")
    warned = sum(1 for c in checks if c.status == "WARN")
    if spec.fmt == "json":
        obj = {
            "group": f"S{basis.degree}",
            "configuration": spec.alphabet.text_from_word(basis.seed),
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail} for c in checks
            ],
            "passed": failed == 0,
            "complete": table.complete,
        }
        sys.stdout.write(canonical_json(obj))
    elif spec.fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["check", "status", "detail"])
        writer.writerows([c.name, c.status, c.detail] for c in checks)
        sys.stdout.write(out.getvalue())
    else:
        for c in checks:
            line = f"{c.status} {c.name}"
            if c.detail:
                line += f": {c.detail}"
            sys.stdout.write(line + "\n")
        verdict = "PASS" if failed == 0 else "FAIL"
        sys.stdout.write(
            f"verification: {verdict} ({len(checks)} checks, {warned} warnings)\n"
        )
    if failed:
        return 1
    return 0 if table.complete else 2


# ----------------------------- entry point -----------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symadapt",
        description=(
            "Exact symmetry-adapted bases and coupling-coefficient tables for "
            "configurations of n particles under the symmetric group S_n."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True,
                        help="configuration word, e.g. 'aab' or 'alpha,alpha,beta'")
    common.add_argument("--alphabet", default=None,
                        help="state alphabet, e.g. 'abc' or 'alpha,beta,gamma' "
                             "(default: the sorted distinct labels of --config)")
    common.add_argument("--order", default=None, metavar="FILE",
                        help="orbit ordering override: one configuration word per line")
    common.add_argument("--state-ops", default=None, metavar="LIST",
                        help="state operators, e.g. '(a b)' or '(a b),(a b)+(a c)+(b c)'")
    common.add_argument("--format", default="text", choices=("text", "csv", "json"))
    common.add_argument("--verbose", action="store_true",
                        help="dump operator matrices to standard error")

    sub.add_parser("basis", parents=[common],
                   help="compute and print the labeled basis / coefficient table")
    eig = sub.add_parser("eigenvalues", parents=[common],
                         help="print the realized eigenvalue multiset of a class operator")
    eig.add_argument("--k", type=int, required=True,
                     help="subgroup degree k of the class operator C(k)")
    sub.add_parser("verify", parents=[common],
                   help="recompute the table and run the exact verification suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = build_runspec(args)
        if args.command == "basis":
            return cmd_basis(spec)
        if args.command == "eigenvalues":
            return cmd_eigenvalues(spec, args.k)
        return cmd_verify(spec)
    except BrokenPipeError:
        # downstream consumer (e.g. `head`) closed the pipe; leave quietly
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
