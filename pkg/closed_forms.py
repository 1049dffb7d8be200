"""Closed-form Kemeny's constants and moments of graph families, barbells and pendant constructions."""

from collections import namedtuple, OrderedDict
from fractions import Fraction
import inspect
import sys

from graphs import add_edges, attach_pendants, make_barbell, make_complete, make_kn_path, make_path, make_star
from kemeny import kemeny, summarize

ClosedFormResult = namedtuple('ClosedFormResult', ('name', 'parameters', 'value', 'verified_against_direct'))
TripletVariants = namedtuple('TripletVariants', ('bar', 'tilde', 'hat', 'star'))
ComparisonCheck = namedtuple('ComparisonCheck', ('quantity', 'difference', 'expected_sign', 'holds'))


def _binomial2(n):
    return n * (n - 1) // 2


class AbstractGraphFamily(object):
    """A family of graphs on n vertices with closed forms for Kemeny's constant, moments and resistances.

    Subclasses set name and implement _build, _kemeny, _moment and _resistance. Vertices are 0-indexed.
    """

    name = None
    min_n = 2

    def __init__(self, n):
        if int(n) < self.min_n:
            raise ValueError('n must be at least %s for the %s family (got %s)' % (self.min_n, self.name, n))
        self.n = int(n)

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise ValueError('Vertex %s is not in 0..%s' % (v, self.n - 1))
        return v

    def build(self):
        return self._build()

    def kemeny(self):
        return self._kemeny()

    def moment(self, j):
        return self._moment(self._check_vertex(j))

    def resistance(self, i, j):
        self._check_vertex(i)
        self._check_vertex(j)
        return Fraction(0) if i == j else self._resistance(i, j)

    def _build(self):
        raise NotImplementedError

    def _kemeny(self):
        raise NotImplementedError

    def _moment(self, j):
        raise NotImplementedError

    def _resistance(self, i, j):
        raise NotImplementedError


class CompleteFamily(AbstractGraphFamily):
    name = 'complete'

    def _build(self):
        return make_complete(self.n)

    def _kemeny(self):
        return Fraction((self.n - 1) ** 2, self.n)

    def _moment(self, j):
        return Fraction(2 * (self.n - 1) ** 2, self.n)

    def _resistance(self, i, j):
        return Fraction(2, self.n)


class PathFamily(AbstractGraphFamily):
    """Path 0-1-...-(n-1). Resistance is distance, and the 1-indexed moment (n-j)^2 + (j-1)^2 becomes
    (n-1-j)^2 + j^2."""
    name = 'path'

    def _build(self):
        return make_path(self.n)

    def _kemeny(self):
        return Fraction(2 * self.n ** 2 - 4 * self.n + 3, 6)

    def _moment(self, j):
        return Fraction((self.n - 1 - j) ** 2 + j ** 2)

    def _resistance(self, i, j):
        return Fraction(abs(i - j))


class StarFamily(AbstractGraphFamily):
    """Star with centre 0. Only the centre's moment has a closed form."""
    name = 'star'

    def _build(self):
        return make_star(self.n)

    def _kemeny(self):
        return self.n - Fraction(3, 2)

    def _moment(self, j):
        if j != 0:
            raise ValueError('Only the centre (vertex 0) of the star has a closed-form moment (got %s)' % j)
        return Fraction(self.n - 1)

    def _resistance(self, i, j):
        return Fraction(1 if 0 in (i, j) else 2)


FAMILY_NAME_TO_CLASS = {cls.name: cls for _, cls in
                        inspect.getmembers(sys.modules[__name__],
                                           lambda obj: (inspect.isclass(obj) and
                                                        issubclass(obj, AbstractGraphFamily) and
                                                        obj != AbstractGraphFamily))}


def create_family(family, n):
    if family not in FAMILY_NAME_TO_CLASS:
        raise ValueError('Unknown family %s (valid values: %s)' % (family, ', '.join(sorted(FAMILY_NAME_TO_CLASS))))
    return FAMILY_NAME_TO_CLASS[family](n)


def kemeny_closed(family, n):
    return create_family(family, n).kemeny()


def moment_closed(family, n, j):
    return create_family(family, n).moment(j)


def verify_closed_form(name, parameters, value, graph):
    """Wrap a closed-form value in a ClosedFormResult, flagged with whether it equals the direct computation."""
    return ClosedFormResult(name=name, parameters=parameters, value=value,
                            verified_against_direct=value == kemeny(graph))


def _check_barbell_parameters(a, b, c):
    if a < 2 or b < 1 or c < 1:
        raise ValueError('Barbell needs a >= 2, b >= 1 and c >= 1 (got a=%s, b=%s, c=%s)' % (a, b, c))


def barbell_edge_count(a, b, c):
    return _binomial2(b + 1) + _binomial2(c + 1) + a - 1


def kemeny_barbell(a, b, c):
    """Kemeny's constant of B(1, a, b, c): K_{b+1} (+) P_a (+) K_{c+1} glued at the path ends."""
    _check_barbell_parameters(a, b, c)
    left_edges, right_edges, path_edges = _binomial2(b + 1), _binomial2(c + 1), a - 1
    left_kemeny, right_kemeny = Fraction(b ** 2, b + 1), Fraction(c ** 2, c + 1)
    left_moment, right_moment = 2 * left_kemeny, 2 * right_kemeny
    path_kemeny = Fraction(2 * a ** 2 - 4 * a + 3, 6)
    path_moment = path_edges ** 2
    total = (left_edges * (left_kemeny + path_moment + right_moment) +
             path_edges * (path_kemeny + left_moment + right_moment) +
             right_edges * (right_kemeny + path_moment + left_moment) +
             2 * left_edges * right_edges * path_edges)
    return total / barbell_edge_count(a, b, c)


def _check_thirds(n):
    if n % 3 or n < 9:
        raise ValueError('n must be a multiple of 3 and at least 9 (got %s)' % n)


def barbell_thirds_parameters(n):
    _check_thirds(n)
    return n // 3, n // 3, n // 3


def barbell_best_parameters(n):
    _check_thirds(n)
    return n // 3 + 2, n // 3 - 1, n // 3 - 1


def kemeny_barbell_thirds(n):
    """Kemeny's constant of B(1, n/3, n/3, n/3)."""
    _check_thirds(n)
    correction = Fraction(-513 * n ** 2 + 1782 * n - 1701, n ** 3 + 9 * n ** 2 + 9 * n - 27)
    return (n ** 3 + 3 * n ** 2 + 24 * n - 36 + correction) / 54


def kemeny_barbell_best(n):
    """Kemeny's constant of B(1, n/3 + 2, n/3 - 1, n/3 - 1)."""
    _check_thirds(n)
    correction = Fraction(297 * n ** 2 - 729 * n + 5832, n ** 3 + 9 * n)
    return (n ** 3 + 3 * n ** 2 + 60 * n - 270 + correction) / 54


def barbell_parameters(n):
    """All (a, b, c) with a >= 2, b, c >= 1 and a + b + c = n, in lexicographic order."""
    return [(a, b, n - a - b) for a in range(2, n - 1) for b in range(1, n - a)]


def best_barbell(n):
    """Return the (a, b, c) maximising Kemeny's constant over barbells B(1, a, b, c) on n vertices, and its value.

    Ties go to the lexicographically smallest parameters.
    """
    if n < 4:
        raise ValueError('A barbell needs at least 4 vertices (got %s)' % n)
    best_parameters, best_value = None, None
    for parameters in barbell_parameters(n):
        value = kemeny_barbell(*parameters)
        if best_value is None or value > best_value:
            best_parameters, best_value = parameters, value
    return best_parameters, best_value


def barbell_closed_form_result(a, b, c):
    return verify_closed_form('barbell', OrderedDict([('a', a), ('b', b), ('c', c)]), kemeny_barbell(a, b, c),
                              make_barbell(1, a, b, c))


def kemeny_kn_path(n):
    """Kemeny's constant of K_n (+) P_n, the clique glued to one end of the path."""
    if n < 2:
        raise ValueError('n must be at least 2 (got %s)' % n)
    return Fraction(3 * n ** 4 - n ** 3 + 5 * n ** 2 - 18 * n + 12, 3 * n * (n + 2))


def moment_kn_path(n):
    """Moment of K_n (+) P_n at the free end of the path."""
    if n < 2:
        raise ValueError('n must be at least 2 (got %s)' % n)
    return (n - 1) ** 2 * (n + 1 + Fraction(2, n))


def moment_minus_kemeny_kn_path(n):
    if n < 2:
        raise ValueError('n must be at least 2 (got %s)' % n)
    return Fraction(3 * n ** 4 - 2 * n ** 2 - 8 * n + 6, 3 * (n + 2))


def kn_path_closed_form_results(n):
    graph, end = make_kn_path(n)
    summary = summarize(graph)
    parameters = OrderedDict([('n', n)])
    return [ClosedFormResult('kn_path_kemeny', parameters, kemeny_kn_path(n), kemeny_kn_path(n) == summary.kemeny),
            ClosedFormResult('kn_path_moment', parameters, moment_kn_path(n),
                             moment_kn_path(n) == summary.moments[end]),
            ClosedFormResult('kn_path_moment_minus_kemeny', parameters, moment_minus_kemeny_kn_path(n),
                             moment_minus_kemeny_kn_path(n) == summary.moments[end] - summary.kemeny)]


def k_pendants_formula(m, kemeny_value, moment_value, k):
    """Kemeny's constant after attaching k pendants at v to a graph with m edges, K(G) and mu(G, v)."""
    if k < 1:
        raise ValueError('k must be at least 1 (got %s)' % k)
    return (m * kemeny_value + k * moment_value + k * (m + k - Fraction(1, 2))) / (m + k)


def kemeny_k_pendants(g, v, k):
    g.check_vertex(v)
    summary = summarize(g)
    return k_pendants_formula(summary.m, summary.kemeny, summary.moments[v], k)


# Pendant-triplet gadgets: a star with centre 0 and leaves 1, 2, 3, plus the edges added among the leaves
PENDANT_GADGET_EDGES = OrderedDict([
    ('bar', ()),
    ('tilde', ((1, 2), )),
    ('hat', ((1, 2), (2, 3))),
    ('star', ((1, 2), (2, 3), (1, 3))),
])

# Kemeny's constant and centre moment of each gadget on its own
PENDANT_GADGETS = OrderedDict([
    ('bar', (Fraction(5, 2), Fraction(3))),
    ('tilde', (Fraction(61, 24), Fraction(11, 3))),
    ('hat', (Fraction(47, 20), Fraction(4))),
    ('star', (Fraction(9, 4), Fraction(9, 2))),
])


def pendant_gadget(name):
    return add_edges(make_star(4), PENDANT_GADGET_EDGES[name])


def triplet_formulas(m, kemeny_value, moment_value):
    """Kemeny's constants of the four pendant-triplet variants of a graph with m edges, K(G) and mu(G, v)."""
    if m < 1:
        raise ValueError('The base graph needs at least one edge (got m=%s)' % m)
    return TripletVariants(
        bar=(2 * m * kemeny_value + 6 * moment_value + 6 * m + 15) / Fraction(2 * m + 6),
        tilde=(6 * m * kemeny_value + 24 * moment_value + 22 * m + 61) / Fraction(6 * m + 24),
        hat=(4 * m * kemeny_value + 20 * moment_value + 16 * m + 47) / Fraction(4 * m + 20),
        star=(2 * m * kemeny_value + 12 * moment_value + 9 * m + 27) / Fraction(2 * m + 12))


def kemeny_triplet_variants(g, v):
    g.check_vertex(v)
    summary = summarize(g)
    return triplet_formulas(summary.m, summary.kemeny, summary.moments[v])


def triplet_graphs(g, v):
    """The four graphs obtained by attaching 3 pendants at v and adding 0, 1, 2 or 3 edges among them."""
    base = attach_pendants(g, v, 3)
    pendants = (g.n, g.n + 1, g.n + 2)
    return TripletVariants(*[add_edges(base, [(pendants[a - 1], pendants[b - 1]) for a, b in edges])
                             for edges in PENDANT_GADGET_EDGES.values()])


def triplet_variants_direct(g, v):
    return TripletVariants(*[kemeny(graph) for graph in triplet_graphs(g, v)])


# name -> (higher variant, lower variant, constant part of the quantity, gap coefficient, denominator factors)
_COMPARISONS = OrderedDict([
    ('hat_over_tilde', ('hat', 'tilde', lambda m: 2 * (4 * m ** 2 - 9 * m - 46), 24,
                        lambda m: (4 * m + 20) * (6 * m + 24))),
    ('star_over_hat', ('star', 'hat', lambda m: 2 * (2 * m ** 2 + m - 12), 8,
                       lambda m: (2 * m + 12) * (4 * m + 20))),
    ('star_over_tilde', ('star', 'tilde', lambda m: 2 * (5 * m ** 2 - 4 * m - 42), 24,
                         lambda m: (2 * m + 12) * (6 * m + 24))),
    ('hat_over_bar', ('hat', 'bar', lambda m: 2 * (4 * m ** 2 + 5 * m - 9), 16,
                      lambda m: (4 * m + 20) * (2 * m + 6))),
    ('star_over_bar', ('star', 'bar', lambda m: 6 * (m ** 2 + m - 3), 12,
                       lambda m: (2 * m + 12) * (2 * m + 6))),
])

COMPARISON_NAMES = tuple(_COMPARISONS)


def comparison_quantities(m, kemeny_value, moment_value):
    """The five quantities whose signs decide the variant comparisons.

    Each quantity is (higher - lower) times a positive denominator, e.g. hat_over_tilde is
    24 m (mu - K) + 2 (4 m^2 - 9 m - 46) = (K(hat) - K(tilde)) (4m + 20)(6m + 24).
    """
    gap = moment_value - kemeny_value
    return OrderedDict((name, coefficient * m * gap + constant(m))
                       for name, (_, _, constant, coefficient, _) in _COMPARISONS.items())


def comparison_denominator(name, m):
    return _COMPARISONS[name][4](m)


def expected_comparison_signs(m):
    """Sign of each comparison quantity for graphs with m edges: 1, -1, 0, or None where nothing is claimed.

    star_over_bar is 0 only at m = 1, whose single connected graph is P_2.
    """
    return OrderedDict([
        ('hat_over_tilde', 1 if m >= 4 else None),
        ('star_over_hat', 1 if m >= 2 else -1),
        ('star_over_tilde', 1 if m >= 4 else None),
        ('hat_over_bar', 1),
        ('star_over_bar', 0 if m == 1 else 1),
    ])


def _sign(value):
    return (value > 0) - (value < 0)


def check_variant_comparisons(g, v):
    """Evaluate every comparison for (g, v) and return name -> ComparisonCheck.

    holds requires the quantity to equal the variants' difference times its denominator, and its sign to match the
    expected one where a sign is claimed.
    """
    g.check_vertex(v)
    summary = summarize(g)
    variants = triplet_formulas(summary.m, summary.kemeny, summary.moments[v])._asdict()
    quantities = comparison_quantities(summary.m, summary.kemeny, summary.moments[v])
    expected_signs = expected_comparison_signs(summary.m)
    checks = OrderedDict()
    for name, (higher, lower, _, _, _) in _COMPARISONS.items():
        difference = variants[higher] - variants[lower]
        quantity = quantities[name]
        holds = quantity == difference * comparison_denominator(name, summary.m)
        if expected_signs[name] is not None:
            holds = holds and _sign(quantity) == expected_signs[name]
        checks[name] = ComparisonCheck(quantity=quantity, difference=difference, expected_sign=expected_signs[name],
                                       holds=holds)
    return checks
