# The MIT License (MIT)
#
# Copyright (c) 2026 The wogtoric Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

import heapq
import logging
from fractions import Fraction

from .binomial import Binomial, NotInKernel, as_incidence
from .exactalg import LengthMismatch, null_space_basis, primitive_integer_vector, integer_kernel_basis
from .util import *

DEFAULT_MAX_SPAIRS = 200000
DEFAULT_MAX_DEGREE = 600

_PROGRESS_EVERY = 1000


class OracleBudgetExceeded(RuntimeError):
    pass

class NotBinomial(AssertionError):
    pass


class Budget:

    def __init__(self, max_spairs=DEFAULT_MAX_SPAIRS, max_degree=DEFAULT_MAX_DEGREE):
        if max_spairs < 1 or max_degree < 1:
            raise ValueError("Oracle budget limits must be positive, got {} S-pairs and degree {}".format(max_spairs, max_degree))

        self.max_spairs = max_spairs
        self.max_degree = max_degree

    def __repr__(self):
        return "Budget(max_spairs={}, max_degree={})".format(self.max_spairs, self.max_degree)


class MonomialOrder:
    """Graded reverse lexicographic order on e1 > e2 > ... .

    With `eliminate_last` the final variable is an auxiliary t compared
    before anything else, giving a block elimination order.
    """

    def __init__(self, variable_count, eliminate_last=False):
        self.variable_count = variable_count
        self.eliminate_last = eliminate_last

    def key(self, exps):
        if self.eliminate_last:
            edges = exps[:-1]
            return (exps[-1], sum(edges), tuple(-e for e in reversed(edges)))

        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __repr__(self):
        return "MonomialOrder({}, eliminate_last={})".format(self.variable_count, self.eliminate_last)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))

def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))

def _quotient(a, b):
    return tuple(x - y for x, y in zip(a, b))

def _product(a, b):
    return tuple(x + y for x, y in zip(a, b))

def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class SparseBinomialPoly:

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                self.terms[tuple(mono)] = coeff

    @classmethod
    def from_binomial(cls, binomial, aux=False):
        extra = (0,) if aux else ()
        return cls({binomial.plus + extra: 1, binomial.minus + extra: -1})

    def lead(self, order):
        mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def monic(self, order):
        _, coeff = self.lead(order)
        return SparseBinomialPoly({m: c / coeff for m, c in self.terms.items()})

    def shifted(self, mono, coeff=1):
        return SparseBinomialPoly({_product(m, mono): c * coeff for m, c in self.terms.items()})

    def __sub__(self, other):
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, 0) - coeff
        return SparseBinomialPoly(terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SparseBinomialPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_binomial(self):
        return len(self.terms) <= 2 and sum(self.terms.values()) == 0

    def is_free_of_last(self):
        return all(mono[-1] == 0 for mono in self.terms)

    def to_binomial(self, order, drop_last=False):
        if len(self.terms) != 2:
            raise NotBinomial("Polynomial with {} terms is not a binomial".format(len(self.terms)))

        lead, _ = self.lead(order)
        trail = next(m for m in self.terms if m != lead)
        if drop_last:
            lead, trail = lead[:-1], trail[:-1]

        return Binomial.from_vector(_quotient(lead, trail))

    def __repr__(self):
        return "SparseBinomialPoly({})".format(self.terms)


class _Entry:
    ## A monic basis element with its leading monomial cached

    __slots__ = ("poly", "lead", "rest")

    def __init__(self, poly, order):
        self.poly = poly.monic(order)
        self.lead, _ = self.poly.lead(order)
        self.rest = [(m, c) for m, c in self.poly.terms.items() if m != self.lead]


def _reduce_term(mono, coeff, entries):
    ## Normal form of a single term is a single term (or zero) for binomial bases
    while True:
        for entry in entries:
            if _divides(entry.lead, mono):
                if not entry.rest:
                    return None, 0

                tail, tail_coeff = entry.rest[0]
                mono = _product(_quotient(mono, entry.lead), tail)
                coeff = -coeff * tail_coeff
                break
        else:
            return mono, coeff

def _normal_form(poly, entries, check=True):
    if any(len(entry.rest) > 1 for entry in entries):
        raise NotBinomial("Basis element with more than two terms")

    terms = {}
    for mono, coeff in poly.terms.items():
        mono, coeff = _reduce_term(mono, coeff, entries)
        if mono is not None:
            terms[mono] = terms.get(mono, 0) + coeff

    result = SparseBinomialPoly(terms)

    if check and not result.is_binomial():
        raise NotBinomial("Reduction produced non-binomial {}".format(result))

    return result

def normal_form(poly, basis, order, check=True):
    return _normal_form(poly, [_Entry(b, order) for b in basis if b], check=check)

def s_polynomial(f, g, order):
    f = f.monic(order)
    g = g.monic(order)
    lead_f, _ = f.lead(order)
    lead_g, _ = g.lead(order)
    lcm = _lcm(lead_f, lead_g)
    return f.shifted(_quotient(lcm, lead_f)) - g.shifted(_quotient(lcm, lead_g))

def _interreduce(entries, order):
    minimal = []
    for idx, entry in enumerate(entries):
        redundant = any(
            _divides(other.lead, entry.lead) and (other.lead != entry.lead or jdx < idx)
            for jdx, other in enumerate(entries) if jdx != idx
        )
        if not redundant:
            minimal.append(entry)

    reduced = []
    for entry in minimal:
        others = [o for o in minimal if o is not entry]
        tail = _normal_form(SparseBinomialPoly(dict(entry.rest)), others, check=False)
        terms = dict(tail.terms)
        terms[entry.lead] = Fraction(1)
        reduced.append(SparseBinomialPoly(terms))

    return sorted(reduced, key=lambda p: order.key(p.lead(order)[0]))

def groebner_basis(polys, order, budget=None):
    """Buchberger's algorithm for binomial ideals.

    Returns (reduced basis, complete).  `complete` is False when the
    S-pair or degree budget cut the computation short.
    """
    budget = budget or Budget()
    entries = []
    heap = []
    pending = set()
    complete = True
    spairs = 0

    def add(poly):
        entry = _Entry(poly, order)
        k = len(entries)
        entries.append(entry)

        for i in range(k):
            degree = sum(_lcm(entries[i].lead, entry.lead))
            heapq.heappush(heap, (degree, i, k))
            pending.add((i, k))

    def chain_criterion(i, j, lcm):
        for k, entry in enumerate(entries):
            if k in (i, j) or not _divides(entry.lead, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False

    for poly in polys:
        if poly:
            add(poly)

    while heap:
        degree, i, j = heapq.heappop(heap)
        lcm = _lcm(entries[i].lead, entries[j].lead)

        if degree > budget.max_degree:
            ## Left in `pending` so the chain criterion never relies on it
            complete = False
            continue

        pending.discard((i, j))

        if _coprime(entries[i].lead, entries[j].lead) or chain_criterion(i, j, lcm):
            continue

        if spairs >= budget.max_spairs:
            complete = False
            logging.warning("Oracle stopped after {} S-pairs with {} left".format(spairs, len(heap) + 1))
            break

        spairs += 1
        remainder = _normal_form(s_polynomial(entries[i].poly, entries[j].poly, order), entries)

        if remainder:
            add(remainder)

        if spairs % _PROGRESS_EVERY == 0:
            logging.debug("{} S-pairs reduced, basis size {}, {} pairs queued".format(spairs, len(entries), len(heap)))

    if not complete and spairs < budget.max_spairs:
        logging.warning("Oracle skipped S-pairs above degree {}".format(budget.max_degree))

    logging.debug("Buchberger finished after {} S-pairs with {} elements (complete={})".format(spairs, len(entries), complete))

    return _interreduce(entries, order), complete

def is_groebner_basis(basis, order):
    entries = [_Entry(b, order) for b in basis]

    for j in range(len(entries)):
        for i in range(j):
            if _coprime(entries[i].lead, entries[j].lead):
                continue
            if _normal_form(s_polynomial(entries[i].poly, entries[j].poly, order), entries):
                return False

    return True


def lattice_ideal_generators(incidence):
    matrix = as_incidence(incidence).matrix
    basis = null_space_basis(matrix)

    if not basis:
        return []

    if len(basis) == 1:
        vectors = [primitive_integer_vector(basis[0])]
    else:
        vectors = integer_kernel_basis(matrix)

    return [Binomial.from_vector(v) for v in vectors]

def saturation_system(lattice, mu):
    """Lattice generators plus t * (product of their support) - 1, under an order eliminating t."""
    in_support = set().union(*(b.support for b in lattice))
    product = tuple(1 if eid in in_support else 0 for eid in range(1, mu + 1))

    relation = SparseBinomialPoly({product + (1,): 1, (0,) * (mu + 1): -1})
    polys = [SparseBinomialPoly.from_binomial(b, aux=True) for b in lattice] + [relation]

    return polys, MonomialOrder(mu + 1, eliminate_last=True)

def saturate_markov_basis(incidence, budget=None):
    """Generating set of the toric ideal by saturating the lattice ideal.

    Returns (basis, certified).  On budget exhaustion the partial basis
    is returned with certified False.
    """
    incidence = as_incidence(incidence)
    budget = budget or Budget()
    lattice = lattice_ideal_generators(incidence)

    if not lattice:
        return [], True

    polys, order = saturation_system(lattice, incidence.edge_count)
    basis, complete = groebner_basis(polys, order, budget)

    eliminated = [p.to_binomial(order, drop_last=True) for p in basis if p.is_free_of_last()]

    logging.debug("Saturation kept {} of {} basis elements".format(len(eliminated), len(basis)))

    if complete:
        try:
            return minimalize(eliminated, incidence, budget), True
        except OracleBudgetExceeded as exc:
            logging.warning("Markov basis is not minimal: {}".format(exc))
            return eliminated, False

    partial = []
    for b in lattice + eliminated:
        if b not in partial:
            partial.append(b)

    logging.warning("Markov basis is not certified: budget {} exhausted".format(budget))
    return partial, False

def minimalize(basis, incidence, budget=None):
    incidence = as_incidence(incidence)

    for b in basis:
        if not incidence.contains(b.vector):
            raise NotInKernel(b)

    grades = incidence.column_grades()
    order = MonomialOrder(incidence.edge_count)
    ordered = sorted(set(basis), key=lambda b: (dot(grades, b.plus), order.key(b.plus), order.key(b.minus)))

    kept = []
    for b in ordered:
        if not verify_membership(b, kept, budget):
            kept.append(b)

    return kept

def verify_membership(f, basis, budget=None):
    if f in basis:
        return True

    if not basis:
        return False

    for b in basis:
        if b.length != f.length:
            raise LengthMismatch("Binomials over {} and {} edges".format(f.length, b.length))

    order = MonomialOrder(f.length)
    gb, complete = groebner_basis([SparseBinomialPoly.from_binomial(b) for b in basis], order, budget)

    if not complete:
        raise OracleBudgetExceeded("Groebner basis for the membership test did not finish within {}".format(budget or Budget()))

    return not normal_form(SparseBinomialPoly.from_binomial(f), gb, order)
