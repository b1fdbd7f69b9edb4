"""Exact irreducible characters of symmetric groups.

Characters are computed by the Murnaghan-Nakayama rule, implemented on
beta-numbers (first-column hook lengths): removing a border strip of length t
replaces one beta-number b by b - t when b - t is free, with sign (-1)^h
where h counts the beta-numbers jumped over.  The largest cycle is stripped
first and results are memoized on canonical (shape, remaining cycles) keys,
so full tables for small degrees are cheap and cached per process.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial
from typing import NamedTuple

from .exact import GR_ZERO, QHalfLaurent
from .partitions import Partition, enumerate_partitions


class CharacterValue(NamedTuple):
    nu: Partition
    mu: Partition
    value: int


class SchurExpansion(NamedTuple):
    """Schur function in the power-sum basis: terms[eta] = chi_nu(eta)/z_eta."""

    nu: Partition
    terms: dict


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    l = len(shape)
    return tuple(shape[i] + l - 1 - i for i in range(l))


def _shape_from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    l = len(beta)
    shape = [beta[i] - (l - 1 - i) for i in range(l)]
    return tuple(p for p in shape if p > 0)


def _strip_removals(shape: tuple[int, ...], t: int):
    """All ways to remove a border strip of length t; yields (shape, sign)."""
    beta = _beta_set(shape)
    in_beta = set(beta)
    for idx, b in enumerate(beta):
        c = b - t
        if c < 0 or c in in_beta:
            continue
        jumped = sum(1 for x in beta if c < x < b)
        new_beta = list(beta)
        new_beta[idx] = c
        yield _shape_from_beta(new_beta), -1 if jumped % 2 else 1


@cache
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    t, rest = cycles[0], cycles[1:]
    total = 0
    for smaller, sign in _strip_removals(shape, t):
        total += sign * _mn(smaller, rest)
    return total


def character(nu: Partition, mu: Partition) -> int:
    """Value of the irreducible character labeled nu on the class mu."""
    if nu.size != mu.size:
        raise ValueError(f"size mismatch: |nu|={nu.size}, |mu|={mu.size}")
    return _mn(nu.parts, mu.parts)


@cache
def character_table(d: int) -> tuple[tuple[int, ...], ...]:
    """Full character table of degree d; rows by irrep nu, columns by class mu,
    both in the fixed partition enumeration order."""
    parts = enumerate_partitions(d)
    return tuple(tuple(character(nu, mu) for mu in parts) for nu in parts)


def character_values(d: int) -> list[CharacterValue]:
    """The degree-d table flattened to one record per (irrep, class) pair."""
    parts = enumerate_partitions(d)
    table = character_table(d)
    return [
        CharacterValue(nu, mu, value)
        for nu, row in zip(parts, table)
        for mu, value in zip(parts, row)
    ]


def dimension(nu: Partition) -> int:
    """Dimension of the irreducible labeled nu, as a character value."""
    return character(nu, Partition([1] * nu.size))


def dimension_hook(nu: Partition) -> int:
    """Dimension by the hook length formula; the independent oracle."""
    prod = 1
    for h in nu.hooks():
        prod *= h
    return factorial(nu.size) // prod


def central_character_transposition(nu: Partition) -> Fraction:
    """Scalar by which the sum of all transpositions acts on the irrep nu.

    Equals |C(2)| * chi_nu(transposition class) / dim, and must agree with
    kappa(nu)/2 computed purely from the diagram; the two routes share no
    code.
    """
    d = nu.size
    if d < 2:
        return Fraction(0)
    cls = Partition([2] + [1] * (d - 2))
    num_transpositions = d * (d - 1) // 2
    return Fraction(num_transpositions * character(nu, cls), dimension(nu))


def schur_in_p(nu: Partition) -> SchurExpansion:
    """Schur function expanded over power sums: sum_eta chi_nu(eta)/z_eta p_eta."""
    terms = {
        eta: Fraction(character(nu, eta), eta.z())
        for eta in enumerate_partitions(nu.size)
    }
    return SchurExpansion(nu, terms)


def schur_principal_specialization(nu: Partition) -> tuple[QHalfLaurent, QHalfLaurent]:
    """The specialization at x_i = q^(i-1) as an exact rational q-expression.

    Returns the pair (q^n(nu), prod_cells (1 - q^hook)); exponents live in the
    half-integer lattice used elsewhere, so q^k is stored with key 2k.
    """
    numerator = QHalfLaurent.monomial(1, 2 * nu.n_weight())
    denominator = QHalfLaurent.one()
    for h in nu.hooks():
        denominator = denominator * (
            QHalfLaurent.one() - QHalfLaurent.monomial(1, 2 * h)
        )
    return numerator, denominator


def principal_specialization_check(nu: Partition, order: int) -> bool:
    """Cross-check of the hook form against the power-sum expansion.

    Substitutes finitely many geometric variables x_i = q^(i-1) into the
    p-expansion and compares with the q-series of the hook form up to q^order.
    """
    nvars = order + nu.size + 1
    expansion = schur_in_p(nu)
    poly: dict[int, Fraction] = {}
    for eta, coeff in expansion.terms.items():
        term: dict[int, Fraction] = {0: Fraction(1)}
        for part in eta:
            pk = _power_sum_geometric(part, nvars, order)
            term = _qmul(term, pk, order)
        for k, v in term.items():
            poly[k] = poly.get(k, Fraction(0)) + coeff * v
    hook_series = _hook_form_series(nu, order)
    for k in range(order + 1):
        if poly.get(k, Fraction(0)) != hook_series.get(k, Fraction(0)):
            return False
    return True


def _power_sum_geometric(k: int, nvars: int, order: int) -> dict[int, Fraction]:
    """p_k(1, q, ..., q^(nvars-1)) truncated past q^order."""
    out: dict[int, Fraction] = {}
    for i in range(nvars):
        e = k * i
        if e > order:
            break
        out[e] = out.get(e, Fraction(0)) + 1
    return out


def _qmul(a: dict[int, Fraction], b: dict[int, Fraction], order: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            if k <= order:
                out[k] = out.get(k, Fraction(0)) + va * vb
    return out


def _hook_form_series(nu: Partition, order: int) -> dict[int, Fraction]:
    """q-series of q^n(nu) / prod (1 - q^h) up to q^order."""
    series = {nu.n_weight(): Fraction(1)} if nu.n_weight() <= order else {}
    for h in nu.hooks():
        geom = {e: Fraction(1) for e in range(0, order + 1, h)}
        series = _qmul(series, geom, order)
    return series
