"""
Ideal arithmetic: Buchberger's algorithm, normal forms, Hilbert functions,
elimination, saturation, intersections and radicals of zero-dimensional
projective schemes.

Polynomials are handled internally as raw ``{exponents: coefficient}``
dicts; IdealPresentation and GroebnerBasis wrap them back into
Polynomial values at the boundary.
"""

import heapq
import itertools
import logging
import operator
import random
from dataclasses import dataclass, field

from doublepoints.algebra.exact_arith import field_div, matrix_rank, null_space
from doublepoints.algebra.poly_core import (Polynomial, PolyRing, _iadd_terms, _mul_terms, exact_divide, monomial_exponents,
                                            squarefree_part, substitute)
from doublepoints.core_validations import default_random_seed, max_radical_attempts
from doublepoints.errors import InputError, MathematicalRefusal, PositiveDimensionalError, RingMismatchError

LOGGER = logging.getLogger(__name__)

TERM_ORDER_KINDS = ('grevlex', 'lex', 'elimination')


def _grevlex(exps):
    return (sum(exps),) + tuple(map(operator.neg, reversed(exps)))


@dataclass(frozen=True)
class TermOrder(object):
    """
    A monomial order. ``elimination`` compares the first ``block`` variables
    by grevlex and breaks ties by grevlex on the rest, so every monomial
    involving the block dominates the monomials free of it.
    """
    kind: str = 'grevlex'
    block: int = 0
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in TERM_ORDER_KINDS:
            raise InputError('unknown term order %r' % self.kind)
        if self.kind == 'elimination' and self.block < 1:
            raise InputError('an elimination order needs a nonempty block')

    def key(self, exps):
        cached = self._cache.get(exps)
        if cached is None:
            if self.kind == 'grevlex':
                cached = _grevlex(exps)
            elif self.kind == 'lex':
                cached = exps
            else:
                cached = (_grevlex(exps[:self.block]), _grevlex(exps[self.block:]))
            self._cache[exps] = cached
        return cached


GREVLEX = TermOrder('grevlex')
LEX = TermOrder('lex')


def elimination_order(block):
    return TermOrder('elimination', block)


def _divides(small, big):
    return all(a <= b for a, b in zip(small, big))


def _monic(terms, lead):
    coeff = terms[lead]
    if coeff == 1:
        return terms
    return {e: field_div(c, coeff) for e, c in terms.items()}


def _reduce(terms, basis, key):
    """
    Complete reduction of terms by basis, a list of (leading exponent, monic terms).
    """
    p = dict(terms)
    remainder = {}
    add, sub = operator.add, operator.sub
    while p:
        lead = max(p, key=key)
        coeff = p[lead]
        for glead, g in basis:
            if _divides(glead, lead):
                shift = tuple(map(sub, lead, glead))
                for exps, gc in g.items():
                    k = tuple(map(add, exps, shift))
                    value = p.get(k, 0) - coeff * gc
                    if value == 0:
                        p.pop(k, None)
                    else:
                        p[k] = value
                break
        else:
            remainder[lead] = coeff
            del p[lead]
    return remainder


def _spolynomial(f, g):
    (flead, fterms), (glead, gterms) = f, g
    lcm = tuple(map(max, flead, glead))
    fshift = tuple(map(operator.sub, lcm, flead))
    gshift = tuple(map(operator.sub, lcm, glead))
    result = {tuple(map(operator.add, e, fshift)): c for e, c in fterms.items()}
    _iadd_terms(result, {tuple(map(operator.add, e, gshift)): c for e, c in gterms.items()}, -1)
    return result


class GroebnerBasis(object):
    """
    A reduced Gröbner basis for one term order.
    """

    def __init__(self, ring, order, elements):
        """
        :param ring: PolyRing
        :param order: TermOrder
        :param elements: list of (leading exponent, monic terms), sorted by decreasing leading monomial
        """
        self.ring = ring
        self.order = order
        self.elements = elements

    @property
    def polynomials(self):
        return [Polynomial._make(self.ring, dict(terms)) for _, terms in self.elements]

    def leading_monomials(self):
        return [lead for lead, _ in self.elements]

    def max_degree(self):
        return max((sum(lead) for lead, _ in self.elements), default=0)

    def reduce_terms(self, terms):
        return _reduce(terms, self.elements, self.order.key)

    def normal_form(self, f):
        f = f.change_ring(self.ring) if f.ring.variables != self.ring.variables else f
        return Polynomial._make(self.ring, self.reduce_terms(f.terms))

    def contains(self, f):
        return not self.normal_form(f).terms

    def is_unit(self):
        return any(not any(lead) for lead, _ in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.polynomials)


def buchberger(ideal, order=GREVLEX):
    """
    Reduced Gröbner basis by Buchberger's algorithm with the normal selection
    strategy and the product and chain criteria.
    :param ideal: IdealPresentation
    :param order: TermOrder
    :return: GroebnerBasis
    """
    key = order.key
    basis = []
    heap = []
    pending = set()

    def insert(terms):
        lead = max(terms, key=key)
        index = len(basis)
        basis.append((lead, _monic(terms, lead)))
        for other in range(index):
            lcm = tuple(map(max, basis[other][0], lead))
            heapq.heappush(heap, (key(lcm), other, index))
            pending.add((other, index))

    for generator in ideal.generators:
        reduced = _reduce(generator.terms, basis, key)
        if reduced:
            insert(reduced)

    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        ilead, jlead = basis[i][0], basis[j][0]
        if all(a == 0 or b == 0 for a, b in zip(ilead, jlead)):
            continue
        lcm = tuple(map(max, ilead, jlead))
        chain = False
        for k, (klead, _) in enumerate(basis):
            if k in (i, j) or not _divides(klead, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        remainder = _reduce(_spolynomial(basis[i], basis[j]), basis, key)
        processed += 1
        if remainder:
            insert(remainder)
            if basis[-1][0] == ideal.ring.zero_exponent:
                break

    minimal = []
    for index, (lead, terms) in enumerate(basis):
        redundant = False
        for other, (olead, _) in enumerate(basis):
            if other == index or not _divides(olead, lead):
                continue
            if olead != lead or other < index:
                redundant = True
                break
        if not redundant:
            minimal.append((lead, terms))
    reduced = []
    for index, (lead, terms) in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        tail = _reduce({e: c for e, c in terms.items() if e != lead}, others, key)
        tail[lead] = 1
        reduced.append((lead, tail))
    reduced.sort(key=lambda item: key(item[0]), reverse=True)
    LOGGER.debug('groebner basis over %r (%s): %d elements, %d S-polynomials reduced',
                 ideal.ring, order.kind, len(reduced), processed)
    return GroebnerBasis(ideal.ring, order, reduced)


def normal_form(f, basis):
    """
    Remainder of f modulo a reduced Gröbner basis.
    """
    return basis.normal_form(f)


class IdealPresentation(object):
    """
    A finitely generated ideal with its Gröbner bases cached per term order.
    """

    def __init__(self, ring, generators=()):
        """
        :param ring: PolyRing
        :param generators: Polynomials (or scalars) over rings with the same variables
        """
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring.variables != ring.variables:
                raise RingMismatchError('generator %s is not in %r' % (g, ring))
            ring = g._common_ring(ring)
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = [g if g.ring is ring else Polynomial._make(ring, g.terms) for g in gens]
        self._bases = {}

    @classmethod
    def parse(cls, ring, texts):
        return cls(ring, [ring.parse(text) for text in texts])

    def groebner_basis(self, order=GREVLEX):
        basis = self._bases.get(order)
        if basis is None:
            basis = buchberger(self, order)
            self._bases[order] = basis
        return basis

    def normal_form(self, f, order=GREVLEX):
        return self.groebner_basis(order).normal_form(f)

    def contains(self, f):
        return self.groebner_basis().contains(f)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def is_unit(self):
        return self.groebner_basis().is_unit()

    def is_zero(self):
        return not self.generators

    def reduced_generators(self, order=GREVLEX):
        return self.groebner_basis(order).polynomials

    def change_ring(self, ring):
        return IdealPresentation(ring, [g.change_ring(ring) for g in self.generators])

    def hilbert_function(self, upto=None):
        return hilbert_function(self, upto)

    def __add__(self, other):
        return ideal_combine(self, other, 'sum')

    def __mul__(self, other):
        return ideal_combine(self, other, 'product')

    def __eq__(self, other):
        if not isinstance(other, IdealPresentation):
            return NotImplemented
        if self.ring.variables != other.ring.variables:
            return False
        mine = [terms for _, terms in self.groebner_basis().elements]
        theirs = [terms for _, terms in other.groebner_basis().elements]
        return mine == theirs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __str__(self):
        return 'Ideal(%s)' % ', '.join(str(g) for g in self.generators)

    def __repr__(self):
        return 'IdealPresentation(%r, %s)' % (self.ring, self)


@dataclass
class HilbertData(object):
    """
    Values H(0..T) of the Hilbert function of R/I. stable_value is None when
    no plateau was detected within the computed range.
    """
    values: list
    stable_value: object
    stable_from: object

    @property
    def stabilized(self):
        return self.stable_value is not None


def hilbert_function(ideal, upto=None, limit=None):
    """
    Hilbert function of R/I from the standard monomials of a grevlex basis.

    A plateau is accepted after three consecutive equal values starting past
    the largest leading-monomial degree.
    :param ideal: homogeneous IdealPresentation
    :param upto: compute at least H(0..upto)
    :param limit: give up on plateau detection after this degree
    :return: HilbertData
    """
    if not ideal.is_homogeneous():
        raise InputError('the Hilbert function needs a homogeneous ideal')
    basis = ideal.groebner_basis(GREVLEX)
    leads = basis.leading_monomials()
    top = basis.max_degree()
    if limit is None:
        limit = max(upto or 0, top + 3) + 24
    n = ideal.ring.ngens
    values = []
    standard = [] if basis.is_unit() else [ideal.ring.zero_exponent]
    t = 0
    while True:
        values.append(len(standard))
        plateau = t - 2 >= top and values[t] == values[t - 1] == values[t - 2]
        if (plateau and (upto is None or t >= upto)) or t >= max(limit, upto or 0):
            break
        t += 1
        following = set()
        for exps in standard:
            for i in range(n):
                raised = exps[:i] + (exps[i] + 1,) + exps[i + 1:]
                if raised in following:
                    continue
                if not any(sum(lead) <= t and _divides(lead, raised) for lead in leads):
                    following.add(raised)
        standard = sorted(following)
    stable = None
    if len(values) >= 3 and len(values) - 3 >= top and values[-1] == values[-2] == values[-3]:
        stable = values[-1]
    stable_from = None
    if stable is not None:
        stable_from = len(values) - 1
        while stable_from > 0 and values[stable_from - 1] == stable:
            stable_from -= 1
    LOGGER.debug('hilbert function %s (stable %s from %s)', values, stable, stable_from)
    return HilbertData(values, stable, stable_from)


def scheme_length(ideal):
    """
    Length of the 0-dimensional projective scheme of a homogeneous ideal.
    """
    data = hilbert_function(ideal)
    if not data.stabilized:
        raise PositiveDimensionalError('Hilbert function of %s does not stabilize' % ideal)
    return data.stable_value


def fresh_variable(ring, base='t'):
    name = base
    suffix = 0
    while name in ring:
        suffix += 1
        name = '%s%d' % (base, suffix)
    return name


def eliminate(ideal, drop):
    """
    I ∩ K[remaining variables], returned over the ring of the remaining variables.
    :param ideal: IdealPresentation
    :param drop: iterable of variable names to eliminate
    """
    drop = set(drop)
    for name in drop:
        ideal.ring.index(name)
    drop = [name for name in ideal.ring.variables if name in drop]
    if not drop:
        return ideal
    kept = [name for name in ideal.ring.variables if name not in drop]
    if not kept:
        raise InputError('cannot eliminate every variable')
    work_ring = PolyRing(drop + kept, ideal.ring.domain)
    target = PolyRing(kept, ideal.ring.domain)
    work = IdealPresentation(work_ring, [g.change_ring(work_ring) for g in ideal.generators])
    basis = work.groebner_basis(elimination_order(len(drop)))
    block = len(drop)
    survivors = [Polynomial._make(work_ring, terms) for lead, terms in basis.elements if not any(lead[:block])]
    LOGGER.debug('eliminated %s: %d of %d basis elements survive', ','.join(drop), len(survivors), len(basis))
    return IdealPresentation(target, [g.change_ring(target) for g in survivors])


def ideal_power(ideal, exponent):
    if exponent < 0:
        raise InputError('ideal powers need a natural exponent')
    result = [ideal.ring.one()]
    for _ in range(exponent):
        products = {}
        for a in result:
            for g in ideal.generators:
                p = (a * g).monic()
                products[p] = True
        result = list(products)
    return IdealPresentation(ideal.ring, result)


def intersect(first, second):
    """
    I ∩ J by eliminating t from t*I + (1 - t)*J.
    """
    ring = first.ring
    if first.is_zero() or second.is_zero():
        return IdealPresentation(ring, [])
    name = fresh_variable(ring)
    extended = PolyRing((name,) + ring.variables, ring.domain)
    t = extended.gen(name)
    gens = [t * g.change_ring(extended) for g in first.generators]
    gens += [(1 - t) * g.change_ring(extended) for g in second.generators]
    return eliminate(IdealPresentation(extended, gens), [name])


def ideal_combine(first, second, op, exponent=None):
    """
    :param op: 'sum', 'product', 'power' (of first, with exponent) or 'intersection'
    """
    if second is not None and first.ring.variables != second.ring.variables:
        raise RingMismatchError('ideals over %r and %r' % (first.ring, second.ring))
    if op == 'sum':
        return IdealPresentation(first.ring, first.generators + second.generators)
    if op == 'product':
        return IdealPresentation(first.ring, [a * b for a in first.generators for b in second.generators])
    if op == 'power':
        return ideal_power(first, exponent)
    if op == 'intersection':
        return intersect(first, second)
    raise InputError('unknown ideal operation %r' % op)


def _last_variable_change(ring, form):
    """
    Substitutions that turn a linear form into the last variable and back.
    :return: (forward, backward) assignment dicts over ring
    """
    coeffs = [form.coefficient(ring.unit_exponent(v)) for v in ring.variables]
    if not form.is_homogeneous() or form.total_degree() != 1:
        raise InputError('%s is not a linear form' % form)
    n = ring.ngens
    pivot = max(i for i, c in enumerate(coeffs) if c != 0)
    others = [i for i in range(n) if i != pivot]
    gens = ring.gens()
    forward = {}
    rest = ring.zero()
    for j, i in enumerate(others):
        forward[ring.variables[i]] = gens[j]
        rest = rest + gens[j] * coeffs[i]
    forward[ring.variables[pivot]] = (gens[n - 1] - rest) / coeffs[pivot]
    backward = {ring.variables[j]: gens[i] for j, i in enumerate(others)}
    backward[ring.variables[n - 1]] = form
    return forward, backward


def _saturate_by_linear_form(ideal, form):
    ring = ideal.ring
    forward, backward = _last_variable_change(ring, form)
    moved = IdealPresentation(ring, [substitute(g, forward, ring) for g in ideal.generators])
    last = ring.ngens - 1
    divided = []
    for g in moved.groebner_basis(GREVLEX).polynomials:
        low = min(e[last] for e in g.terms)
        if low:
            g = Polynomial._make(ring, {e[:last] + (e[last] - low,): c for e, c in g.terms.items()})
        divided.append(g)
    return IdealPresentation(ring, [substitute(g, backward, ring) for g in divided])


def saturate_by_element(ideal, h):
    """
    I : h^∞.
    """
    if h.is_zero():
        return IdealPresentation(ideal.ring, [1])
    if h.is_constant():
        return ideal
    if ideal.is_homogeneous() and h.is_homogeneous() and h.total_degree() == 1:
        return _saturate_by_linear_form(ideal, h)
    ring = ideal.ring
    name = fresh_variable(ring)
    extended = PolyRing((name,) + ring.variables, ring.domain)
    t = extended.gen(name)
    gens = [g.change_ring(extended) for g in ideal.generators] + [1 - t * h.change_ring(extended)]
    return eliminate(IdealPresentation(extended, gens), [name])


def saturate(ideal, by):
    """
    I : J^∞ as the intersection of the saturations by each generator of J.
    """
    if by.ring.variables != ideal.ring.variables:
        raise RingMismatchError('saturating %r by an ideal of %r' % (ideal.ring, by.ring))
    if not by.generators:
        return IdealPresentation(ideal.ring, [1])
    if ideal.is_homogeneous() and _is_irrelevant(by):
        shortcut = _saturate_irrelevant(ideal)
        if shortcut is not None:
            return shortcut
    result = None
    for h in by.generators:
        part = saturate_by_element(ideal, h)
        if part.is_unit():
            continue
        result = part if result is None else intersect(result, part)
    if result is None:
        result = IdealPresentation(ideal.ring, [1])
    LOGGER.debug('saturated %d generators by %d generators', len(ideal.generators), len(by.generators))
    return result


def irrelevant_ideal(ring):
    return IdealPresentation(ring, ring.gens())


def _is_irrelevant(ideal):
    leads = ideal.groebner_basis(GREVLEX).leading_monomials()
    return all(any(lead == ideal.ring.unit_exponent(v) for lead in leads) for v in ideal.ring.variables)


def _saturate_irrelevant(ideal, attempts=None):
    """
    I : m^∞ as I : h^∞ for a linear form h missing the projective zero set of I.
    Returns None when no such form turns up (positive-dimensional support).
    """
    ring = ideal.ring
    if ideal.is_unit():
        return ideal
    rng = random.Random(default_random_seed())
    gens = ring.gens()
    for attempt in range(attempts or max_radical_attempts()):
        form = gens[-1]
        if attempt:
            form = sum((g * rng.randint(-5, 5) for g in gens[:-1]), gens[-1] * rng.randint(1, 5))
        meet = hilbert_function(ideal + IdealPresentation(ring, [form]))
        if meet.stable_value == 0:
            LOGGER.debug('irrelevant saturation through %s', form)
            return _saturate_by_linear_form(ideal, form)
    return None


def krull_dimension(ideal):
    """
    dim R/I, read off the leading monomials of a grevlex basis: the largest set
    of variables no leading monomial is supported on.
    :param ideal: IdealPresentation
    :return: int, -1 for the unit ideal
    """
    basis = ideal.groebner_basis(GREVLEX)
    if basis.is_unit():
        return -1
    n = ideal.ring.ngens
    supports = [frozenset(i for i, e in enumerate(lead) if e) for lead in basis.leading_monomials()]
    for size in range(n, -1, -1):
        for chosen in itertools.combinations(range(n), size):
            free = frozenset(chosen)
            if not any(support <= free for support in supports):
                return size
    return 0


def projective_dimension(ideal):
    """
    Dimension of the projective zero set of a homogeneous ideal, -1 when empty.
    """
    return krull_dimension(ideal) - 1


def colon(ideal, by):
    """
    I : J = ∩ (I ∩ (h)) / h over generators h of J.
    """
    result = None
    for h in by.generators:
        meet = intersect(ideal, IdealPresentation(ideal.ring, [h]))
        part = IdealPresentation(ideal.ring, [exact_divide(g, h) for g in meet.generators])
        result = part if result is None else intersect(result, part)
    return result if result is not None else IdealPresentation(ideal.ring, [1])


def minimal_polynomial(poly, basis, variable_ring, limit=10000):
    """
    Monic generator of {p : p(poly) ∈ I} for a zero-dimensional I, found as
    the first linear dependency among normal forms of 1, poly, poly^2, ...
    :param poly: Polynomial over basis.ring
    :param basis: GroebnerBasis of I
    :param variable_ring: univariate PolyRing for the result
    """
    ring = basis.ring
    forms = [basis.reduce_terms({ring.zero_exponent: 1})]
    power = forms[0]
    while len(forms) <= limit:
        support = sorted(set().union(*[f.keys() for f in forms]))
        columns = [[f.get(m, 0) for f in forms] for m in support]
        if not columns or matrix_rank(columns) < len(forms):
            relation = null_space(columns, len(forms))[0]
            terms = {(k,): c for k, c in enumerate(relation) if c != 0}
            return Polynomial(variable_ring, terms).monic()
        power = basis.reduce_terms(_mul_terms(power, poly.terms))
        forms.append(power)
    raise PositiveDimensionalError('no minimal polynomial of degree <= %d' % limit)


def zero_dim_radical(ideal, rng=None, attempts=None):
    """
    Radical of a homogeneous ideal whose projective scheme is finite.

    A random linear form avoiding the support defines an affine chart; there
    the square-free parts of the minimal polynomials of the coordinates are
    added (Seidenberg) and the result is homogenized back.
    :param ideal: homogeneous IdealPresentation
    :param rng: random.Random used to draw the chart form
    :param attempts: number of chart forms to try
    :return: IdealPresentation
    """
    if not ideal.is_homogeneous():
        raise InputError('zero_dim_radical needs a homogeneous ideal')
    data = hilbert_function(ideal)
    if not data.stabilized:
        raise PositiveDimensionalError('%s does not define a finite scheme' % ideal)
    ring = ideal.ring
    if data.stable_value == 0:
        return IdealPresentation(ring, [1])
    rng = rng or random.Random(0)
    attempts = attempts or max_radical_attempts()
    gens = ring.gens()
    for attempt in range(attempts):
        form = gens[-1]
        if attempt:
            form = sum((g * rng.randint(-5, 5) for g in gens[:-1]), gens[-1] * rng.randint(1, 5))
        if hilbert_function(ideal + IdealPresentation(ring, [form])).stable_value != 0:
            LOGGER.debug('chart form %s meets the support, retrying', form)
            continue
        forward, backward = _last_variable_change(ring, form)
        moved = [substitute(g, forward, ring) for g in ideal.generators]
        last = ring.variables[-1]
        chart = ring.drop([last])
        affine = IdealPresentation(chart, [g.dehomogenize(last, chart) for g in moved])
        basis = affine.groebner_basis(GREVLEX)
        extra = []
        for name in chart.variables:
            univariate = PolyRing([name], ring.domain)
            eliminant = minimal_polynomial(chart.gen(name), basis, univariate)
            extra.append(squarefree_part(eliminant).change_ring(chart) if eliminant.total_degree() > 0
                         else chart.one())
        radical = IdealPresentation(chart, affine.generators + extra)
        closure = [g.homogenize(last, ring) for g in radical.groebner_basis(GREVLEX).polynomials]
        result = IdealPresentation(ring, [substitute(g, backward, ring) for g in closure])
        LOGGER.info('radical computed in chart %s after %d attempt(s)', form, attempt + 1)
        return result
    raise MathematicalRefusal('no admissible affine chart found in %d attempts' % attempts)


def ring_map_kernel(ideal, forms, target, max_degree):
    """
    Homogeneous kernel elements, up to max_degree, of the map
    target -> ideal.ring / ideal sending the i-th variable of target to forms[i].
    :param ideal: homogeneous IdealPresentation
    :param forms: linear Polynomials over ideal.ring
    :param target: PolyRing with len(forms) variables
    :param max_degree: highest degree searched
    :return: list of Polynomials over target
    """
    if len(forms) != target.ngens:
        raise InputError('%d forms for a ring with %d variables' % (len(forms), target.ngens))
    basis = ideal.groebner_basis(GREVLEX)
    previous = {target.zero_exponent: basis.reduce_terms({ideal.ring.zero_exponent: 1})}
    kernel = []
    if not previous[target.zero_exponent]:
        return [target.one()]
    for degree in range(1, max_degree + 1):
        current = {}
        for alpha in monomial_exponents(target.ngens, degree):
            i = next(k for k, a in enumerate(alpha) if a)
            beta = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            current[alpha] = basis.reduce_terms(_mul_terms(previous[beta], forms[i].terms))
        monomials = list(current)
        support = sorted(set().union(*[nf.keys() for nf in current.values()]))
        rows = [[current[alpha].get(m, 0) for alpha in monomials] for m in support]
        for relation in null_space(rows, len(monomials)):
            terms = {alpha: c for alpha, c in zip(monomials, relation) if c != 0}
            kernel.append(Polynomial(target, terms).primitive())
        previous = current
    LOGGER.debug('kernel up to degree %d: %d elements', max_degree, len(kernel))
    return kernel
