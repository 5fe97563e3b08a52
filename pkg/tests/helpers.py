"""Shared fixtures for the test suite."""
from __future__ import annotations

from symadapt import OrbitBasis, StateAlphabet, alphabet_for, orbit

# the phi-ordering used in the distinct-state S_3 fixtures
S3_DISTINCT_ORDER = ["abc", "bac", "cba", "acb", "cab", "bca"]


def make_basis(config: str, alphabet: str | None = None, order: list[str] | None = None) -> OrbitBasis:
    alpha = StateAlphabet.from_text(alphabet) if alphabet else alphabet_for(config)
    basis = orbit(alpha.word_from_text(config), alpha)
    if order is not None:
        basis = basis.with_ordering([alpha.word_from_text(w) for w in order])
    return basis


def s3_distinct_basis() -> OrbitBasis:
    return make_basis("abc", order=S3_DISTINCT_ORDER)
