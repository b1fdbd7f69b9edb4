"""Branched-cover counts by characters and by brute force.

A cover count here is the number of r-tuples of transpositions in S_d whose
product is one fixed permutation of cycle type mu, divided by z_mu.  The
character route evaluates the class-algebra sum; the brute-force route
enumerates tuples, optionally keeping only those whose transpositions
together with the cycles of the fixed permutation act transitively.  The
exponential formula converts between the two normalizations (all covers vs
connected covers) through an x^r/r! grading in the branch-count variable,
and both routes are required to agree wherever enumeration is feasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial

from .characters import character, dimension
from .exact import LaurentSeries
from .genfun import PartitionSeries, ps_log
from .linalg import solve
from .partitions import (
    EMPTY,
    Partition,
    cut_join_incoming,
    enumerate_partitions,
    split_contributions,
)

DEFAULT_BUDGET = 10**7


class BudgetExceededError(RuntimeError):
    """Enumeration would exceed the configured work budget."""

    def __init__(self, estimated: int, budget: int):
        self.estimated = estimated
        self.budget = budget
        super().__init__(
            f"estimated {estimated} tuples exceeds the budget of {budget}"
        )


@dataclass(frozen=True)
class HurwitzNumber:
    g: int
    r: int
    mu: Partition
    value: Fraction


def branch_count(g: int, mu: Partition) -> int:
    """r = 2g - 2 + |mu| + l(mu), the number of simple branch points."""
    return 2 * g - 2 + mu.size + mu.length


def transpositions(d: int) -> list[tuple[int, ...]]:
    """All transpositions of S_d as mapping tuples."""
    out = []
    for a in range(d):
        for b in range(a + 1, d):
            perm = list(range(d))
            perm[a], perm[b] = b, a
            out.append(tuple(perm))
    return out


def canonical_permutation(mu: Partition) -> tuple[int, ...]:
    """A fixed permutation of cycle type mu: cycles laid out consecutively."""
    d = mu.size
    perm = list(range(d))
    start = 0
    for part in mu:
        for k in range(part):
            perm[start + k] = start + (k + 1) % part
        start += part
    return tuple(perm)


def _transitive(tuples, sigma_cycles, d: int) -> bool:
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for t in tuples:
        moved = [i for i in range(d) if t[i] != i]
        union(moved[0], moved[1])
    for cyc in sigma_cycles:
        for x in cyc[1:]:
            union(cyc[0], x)
    root = find(0)
    return all(find(x) == root for x in range(d))


def _cycles_of(perm: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        out.append(cyc)
    return out


def hurwitz_bruteforce(
    r: int,
    mu: Partition,
    transitive_only: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Fraction:
    """Enumerate r-tuples of transpositions multiplying to a fixed permutation
    of type mu; exact count divided by z_mu."""
    d = mu.size
    if d < 1:
        raise ValueError("requires a nonempty partition")
    trans = transpositions(d)
    estimated = len(trans) ** r if trans else (1 if r == 0 else 0)
    if estimated > budget:
        raise BudgetExceededError(estimated, budget)
    sigma = canonical_permutation(mu)
    sigma_cycles = _cycles_of(sigma)
    identity = tuple(range(d))
    count = 0
    stack: list[tuple[int, ...]] = []

    def rec(depth: int, prod: tuple[int, ...]):
        nonlocal count
        if depth == r:
            if prod == sigma and (
                not transitive_only or _transitive(stack, sigma_cycles, d)
            ):
                count += 1
            return
        for t in trans:
            stack.append(t)
            rec(depth + 1, tuple(t[prod[i]] for i in range(d)))
            stack.pop()

    rec(0, identity)
    return Fraction(count, mu.z())


def hurwitz_disconnected(r: int, mu: Partition) -> Fraction:
    """Character-sum route for the all-covers count:
    (1/(z_mu * d!)) * sum_nu dim(nu) * chi_nu(mu) * (kappa_nu/2)^r."""
    d = mu.size
    if d < 1:
        raise ValueError("requires a nonempty partition")
    total = Fraction(0)
    for nu in enumerate_partitions(d):
        chi = character(nu, mu)
        if chi == 0:
            continue
        total += dimension(nu) * chi * Fraction(nu.kappa(), 2) ** r
    return total / (mu.z() * factorial(d))


@cache
def _connected_table(d_max: int, r_max: int):
    """Connected counts for all |mu| <= d_max, r <= r_max via the exponential
    formula: log of the disconnected series in the x^r/r! grading."""
    terms = {EMPTY: LaurentSeries.one(r_max)}
    for d in range(1, d_max + 1):
        for mu in enumerate_partitions(d):
            coeffs = [
                hurwitz_disconnected(r, mu) / factorial(r)
                for r in range(r_max + 1)
            ]
            series = LaurentSeries(0, coeffs, r_max)
            if not series.is_zero():
                terms[mu] = series
    logged = ps_log(PartitionSeries(terms, d_max))
    table: dict[tuple[int, Partition], Fraction] = {}
    for mu, series in logged.terms.items():
        for r, c in series.items():
            if c:
                table[(r, mu)] = Fraction(c) * factorial(r)
    return table


def hurwitz_connected(g: int, mu: Partition) -> Fraction:
    """Connected count at genus g; zero when the branch count is negative."""
    r = branch_count(g, mu)
    if r < 0:
        return Fraction(0)
    table = _connected_table(mu.size, r)
    return table.get((r, mu), Fraction(0))


# -- genus 0 and 1 linear Hodge factors --------------------------------------


@cache
def _psi_g1(exponents: tuple[int, ...]) -> Fraction:
    """Genus-1 correlator of psi powers, by the string and dilaton equations;
    the one-point value 1/24 is the base case."""
    n = len(exponents)
    if sum(exponents) != n:
        return Fraction(0)
    if n == 1:
        return Fraction(1, 24)  # single psi on the one-pointed space
    if 0 in exponents:
        rest = list(exponents)
        rest.remove(0)
        total = Fraction(0)
        for j in range(len(rest)):
            if rest[j] >= 1:
                reduced = rest[:j] + [rest[j] - 1] + rest[j + 1 :]
                total += _psi_g1(tuple(sorted(reduced)))
        return total
    # all exponents >= 1 and summing to n forces some exponent equal to 1
    rest = list(exponents)
    rest.remove(1)
    return (n - 1) * _psi_g1(tuple(sorted(rest)))


@cache
def _lambda_psi_g1(exponents: tuple[int, ...]) -> Fraction:
    """Genus-1 correlator of the degree-1 Hodge class against psi powers;
    the class is inert under the string equation."""
    n = len(exponents)
    if sum(exponents) != n - 1:
        return Fraction(0)
    if n == 1:
        return Fraction(1, 24)  # the bare Hodge class integral
    rest = list(exponents)
    rest.remove(0)  # some exponent must vanish by the dimension count
    total = Fraction(0)
    for j in range(len(rest)):
        if rest[j] >= 1:
            reduced = rest[:j] + [rest[j] - 1] + rest[j + 1 :]
            total += _lambda_psi_g1(tuple(sorted(reduced)))
    return total


def _exponent_tuples(n_slots: int, total: int):
    if n_slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _exponent_tuples(n_slots - 1, total - first):
            yield (first,) + rest


def linear_hodge_factor(g: int, mu: Partition) -> Fraction:
    """The curve-space integral in the cover-count formula, at genus 0 or 1.

    Genus 0 is the closed form |mu|^(l-3), which also extends the definition
    below three points.  Genus 1 expands the integrand and reduces every
    correlator to the two one-point values 1/24 by string and dilaton.
    """
    d, l = mu.size, mu.length
    if g == 0:
        return Fraction(d) ** (l - 3)
    if g != 1:
        raise ValueError(f"no independent evaluation available for genus {g}")
    psi_part = Fraction(0)
    for exps in _exponent_tuples(l, l):
        weight = 1
        for m, a in zip(mu.parts, exps):
            weight *= m**a
        psi_part += weight * _psi_g1(tuple(sorted(exps)))
    lam_part = Fraction(0)
    for exps in _exponent_tuples(l, l - 1):
        weight = 1
        for m, a in zip(mu.parts, exps):
            weight *= m**a
        lam_part += weight * _lambda_psi_g1(tuple(sorted(exps)))
    return psi_part - lam_part


def elsv_value(g: int, mu: Partition) -> Fraction:
    """Hook-type prefactor times the linear Hodge factor:
    r!/|Aut(mu)| * prod mu_i^mu_i / mu_i! * (curve-space integral)."""
    r = branch_count(g, mu)
    pref = Fraction(factorial(r), mu.aut_order())
    for m in mu:
        pref *= Fraction(m**m, factorial(m))
    return pref * linear_hodge_factor(g, mu)


def elsv_check(g: int, mu: Partition) -> bool:
    """Exact equality of the cover count with its Hodge-side closed form."""
    if g > 1:
        raise ValueError("the Hodge side is only independently known for g <= 1")
    return elsv_value(g, mu) == hurwitz_connected(g, mu)


def solve_hodge_from_hurwitz(g: int, part_sizes: list[int]) -> dict[str, Fraction]:
    """Read the one-point genus-1 integrals back out of cover counts.

    For single-row mu = (m) the genus-1 relation is linear in the two unknown
    integrals x (psi) and y (Hodge class):  m*x - y = H / prefactor.
    Two or more degrees determine them; extra degrees must stay consistent.
    """
    if g == 0:
        return {
            f"hodge_factor_d{m}": linear_hodge_factor(0, Partition([m]))
            for m in part_sizes
        }
    if g != 1:
        raise ValueError(f"unsupported genus {g}")
    if len(part_sizes) < 2:
        raise ValueError("need at least two degrees to determine two integrals")
    rows, rhs = [], []
    for m in part_sizes:
        mu = Partition([m])
        r = branch_count(1, mu)
        pref = Fraction(factorial(r) * m**m, factorial(m))
        rows.append([Fraction(m), Fraction(-1)])
        rhs.append(hurwitz_connected(1, mu) / pref)
    sol = solve(rows, rhs)
    return {"psi": sol[0], "lambda": sol[1]}


def hurwitz_cutjoin_check(g: int, mu: Partition) -> bool:
    """The branch-point recursion: removing one simple branch point writes the
    count at (g, mu) as cut/join-weighted counts one step down, plus split
    terms weighted by the binomial distribution of the remaining branch
    points over the two components.

    The recursion needs a branch point to remove; with r < 1 (only the
    trivial cover, g=0 and mu a single row of size 1) it is vacuous.
    """
    r = branch_count(g, mu)
    if r < 1:
        return True
    lhs = hurwitz_connected(g, mu)
    joins_into, cuts_into = cut_join_incoming(mu)
    rhs = Fraction(0)
    for nu, w in joins_into:
        rhs += w * hurwitz_connected(g, nu)
    if g >= 1:
        for nu, w in cuts_into:
            rhs += w * hurwitz_connected(g - 1, nu)
    half = Fraction(1, 2)
    for term in split_contributions(mu):
        for g1 in range(g + 1):
            g2 = g - g1
            r1 = branch_count(g1, term.nu1)
            r2 = branch_count(g2, term.nu2)
            if r1 < 0 or r2 < 0:
                continue
            rhs += (
                half
                * term.weight
                * comb(r - 1, r1)
                * hurwitz_connected(g1, term.nu1)
                * hurwitz_connected(g2, term.nu2)
            )
    return lhs == rhs
