"""Root datum of gl(m,n).

Indices are 1-based throughout, as in matrix units ``e_{ab}``. Index ``a`` is
even when ``a <= m`` and odd otherwise. Weights are stored by their values
on the diagonal matrix units, ``coord(a) = lambda(e_{aa})``.
"""
import functools

import sympy as sp

import kac_typicality.scalars as sc
from kac_typicality.errors import PreconditionError


class Shape:
    """The pair ``(m, n)`` naming ``gl(m,n)``.

    ``m = 0`` or ``n = 0`` gives a purely even algebra with no odd pairs; both
    are accepted so that scans over shapes stay total.
    """

    def __init__(self, m, n):
        if int(m) != m or int(n) != n or m < 0 or n < 0 or m + n < 1:
            raise PreconditionError("invalid shape gl(%s,%s)" % (m, n))
        self.m = int(m)
        self.n = int(n)
        self.size = self.m + self.n

    def __repr__(self):
        return "gl(%d,%d)" % (self.m, self.n)

    def __eq__(self, other):
        return isinstance(other, Shape) and (self.m, self.n) == (other.m,
                                                                 other.n)

    def __hash__(self):
        return hash((self.m, self.n))

    def indices(self):
        return list(range(1, self.size + 1))

    def index_parity(self, a):
        return 1 if a > self.m else 0

    def parity(self, row, col):
        return (self.index_parity(row) + self.index_parity(col)) % 2

    def is_odd_pair(self, i, j):
        return 1 <= i <= self.m < j <= self.size

    def even_positive_pairs(self):
        return [(a, b)
                for a in self.indices()
                for b in self.indices()
                if a < b and self.parity(a, b) == 0]

    def odd_pairs(self):
        return sorted_odd_pairs(self)

    def check_index(self, a):
        if not (1 <= a <= self.size):
            raise PreconditionError("index %s out of range for %s" % (a, self))

    def to_json(self):
        return {'m': self.m, 'n': self.n}


def _to_scalar(x):
    if isinstance(x, sp.Basic):
        return x
    return sc.to_rational(x)


class Weight:
    """A weight of ``gl(m,n)``, i.e., a vector of ``m + n`` coordinates.

    Coordinates are exact rationals, or sympy expressions when the weight is
    symbolic (see :func:`symbolic_weight`).
    """

    def __init__(self, shape, coords):
        coords = tuple(_to_scalar(x) for x in coords)
        if len(coords) != shape.size:
            raise PreconditionError("expected %d coordinates for %s, got %d" %
                                    (shape.size, shape, len(coords)))
        self.shape = shape
        self.coords = coords

    def coord(self, a):
        return self.coords[a - 1]

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise PreconditionError("shape mismatch: %s vs %s" %
                                    (self.shape, other.shape))

    def __add__(self, other):
        self._check_same_shape(other)
        return Weight(self.shape,
                      [x + y for (x, y) in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return Weight(self.shape,
                      [x - y for (x, y) in zip(self.coords, other.coords)])

    def __neg__(self):
        return Weight(self.shape, [-x for x in self.coords])

    def scale(self, c):
        c = _to_scalar(c)
        return Weight(self.shape, [c * x for x in self.coords])

    def __eq__(self, other):
        return (isinstance(other, Weight) and self.shape == other.shape and
                all(sp.expand(x - y) == 0
                    for (x, y) in zip(self.coords, other.coords)))

    def __hash__(self):
        return hash((self.shape, tuple(sp.expand(x) for x in self.coords)))

    def __repr__(self):
        return "Weight(%s, (%s))" % (self.shape, ", ".join(
            str(x) for x in self.coords))

    def is_integral(self):
        return all(sc.is_integral(x) for x in self.coords)

    def to_json(self):
        return {
            'shape': self.shape.to_json(),
            'coords': [sc.rational_to_string(x) for x in self.coords]
        }

    @staticmethod
    def from_json(d):
        shape = Shape(d['shape']['m'], d['shape']['n'])
        return Weight(shape, [sc.parse_rational(s) for s in d['coords']])


def parse_weight(shape, text):
    """Parses a comma-separated list like ``"1,-1/2,0"``."""
    tokens = [s for s in text.split(',')]
    if len(tokens) != shape.size or any(len(s.strip()) == 0 for s in tokens):
        raise PreconditionError(
            "malformed lambda %r: expected %d comma-separated coordinates" %
            (text, shape.size))
    return Weight(shape, [sc.parse_rational(s) for s in tokens])


def zero_weight(shape):
    return Weight(shape, [0] * shape.size)


def epsilon(shape, a):
    shape.check_index(a)
    return Weight(shape, [1 if b == a else 0 for b in shape.indices()])


def root(shape, a, b):
    return epsilon(shape, a) - epsilon(shape, b)


def lambda_symbols(shape):
    return [sp.Symbol('lambda%d' % a) for a in shape.indices()]


def symbolic_weight(shape):
    return Weight(shape, lambda_symbols(shape))


def bilinear_form(lam, mu):
    """The form with ``(eps_a, eps_b) = delta_ab`` for ``a <= m`` and
    ``-delta_ab`` for ``a > m``."""
    lam._check_same_shape(mu)
    m = lam.shape.m
    total = sp.Integer(0)
    for a, (x, y) in enumerate(zip(lam.coords, mu.coords), start=1):
        if a <= m:
            total += x * y
        else:
            total -= x * y
    return total


def rho(shape):
    """Returns ``(rho_0, rho_1, rho)`` with ``rho = rho_0 - rho_1``.

    ``rho_0`` is the half-sum of the even positive roots and ``rho_1`` the
    half-sum of the odd positive roots.
    """
    half = sp.Rational(1, 2)
    rho0 = zero_weight(shape)
    for (a, b) in shape.even_positive_pairs():
        rho0 = rho0 + root(shape, a, b).scale(half)
    rho1 = zero_weight(shape)
    for pair in sorted_odd_pairs(shape):
        rho1 = rho1 + root(shape, pair.i, pair.j).scale(half)
    return rho0, rho1, rho0 - rho1


@functools.total_ordering
class OddPair:
    """An index ``(i, j)`` with ``i <= m < j``, i.e., the odd matrix unit
    ``e_{ij}`` (and ``f_{ij} = e_{ji}``).

    Ordered by ``(i, j) < (s, t)`` iff ``j > t``, or ``j = t`` and ``i < s``.
    """

    def __init__(self, shape, i, j):
        if not shape.is_odd_pair(i, j):
            raise PreconditionError("(%s,%s) is not an odd pair of %s" %
                                    (i, j, shape))
        self.shape = shape
        self.i = i
        self.j = j

    def key(self):
        return (-self.j, self.i)

    def __eq__(self, other):
        return (isinstance(other, OddPair) and self.shape == other.shape and
                (self.i, self.j) == (other.i, other.j))

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash((self.i, self.j))

    def __repr__(self):
        return "(%d,%d)" % (self.i, self.j)

    def as_tuple(self):
        return (self.i, self.j)


def odd_order_cmp(a, b):
    """Returns ``-1``, ``0`` or ``1`` as ``a`` precedes, equals or follows
    ``b``."""
    if a.shape != b.shape:
        raise PreconditionError("shape mismatch: %s vs %s" %
                                (a.shape, b.shape))
    ka, kb = a.key(), b.key()
    return (ka > kb) - (ka < kb)


def sorted_odd_pairs(shape):
    pairs = [
        OddPair(shape, i, j)
        for i in range(1, shape.m + 1)
        for j in range(shape.m + 1, shape.size + 1)
    ]
    return sorted(pairs)


def h_alpha(shape, i, j):
    """Diagonal matrix units of ``h_alpha = [e_ij, f_ij] = e_ii + e_jj``."""
    if not shape.is_odd_pair(i, j):
        raise PreconditionError("(%s,%s) is not an odd pair of %s" %
                                (i, j, shape))
    return ((i, i), (j, j))


def evaluate_h_alpha(mu, i, j):
    (a, _), (b, _) = h_alpha(mu.shape, i, j)
    return mu.coord(a) + mu.coord(b)


def reduce_mod_p(r, fq):
    """Image of a rational in the prime subfield of ``fq``."""
    r = sp.Rational(r)
    if r.q % fq.p == 0:
        raise PreconditionError("denominator of %s is not invertible mod %d" %
                                (r, fq.p))
    return fq.from_int(r.p) / fq.from_int(r.q)


class TypicalityPolynomial:
    """Product of the affine forms ``lambda_i + lambda_j + c_ij`` over the odd
    pairs ``(i, j)``, in increasing order.

    Args:
        shape (Shape): Shape of the algebra.
        factors (list[tuple[int, int, sympy.Rational]]): Triples
            ``(i, j, c_ij)``.
    """

    def __init__(self, shape, factors):
        self.shape = shape
        self.factors = [(i, j, sp.Rational(c)) for (i, j, c) in factors]

    def degree(self):
        return len(self.factors)

    def evaluate(self, lam):
        v = sp.Integer(1)
        for (i, j, c) in self.factors:
            v *= lam.coord(i) + lam.coord(j) + c
        return v

    def evaluate_mod(self, coords, fq):
        """Evaluates at a weight with coordinates in ``fq``.

        Args:
            coords (galois.FieldArray): The ``m + n`` coordinates.
            fq (scalars.FqField): Field of the coordinates.

        Returns:
            galois.FieldArray: The value, a field scalar.
        """
        assert len(coords) == self.shape.size
        v = fq(1)
        for (i, j, c) in self.factors:
            v = v * (coords[i - 1] + coords[j - 1] + reduce_mod_p(c, fq))
        return v

    def as_expr(self):
        lam = lambda_symbols(self.shape)
        v = sp.Integer(1)
        for (i, j, c) in self.factors:
            v *= lam[i - 1] + lam[j - 1] + c
        return v

    def as_poly(self):
        return sp.Poly(self.as_expr(), *lambda_symbols(self.shape), domain='ZZ')

    def to_text(self):
        if len(self.factors) == 0:
            return "1"
        parts = []
        for (i, j, c) in self.factors:
            s = "λ%d + λ%d" % (i, j)
            if c > 0:
                s += " + %s" % c
            elif c < 0:
                s += " - %s" % (-c)
            parts.append("(%s)" % s)
        return "".join(parts)

    def to_json(self):
        return {
            'shape': self.shape.to_json(),
            'factors': [{
                'i': i,
                'j': j,
                'c': sc.rational_to_string(c)
            } for (i, j, c) in self.factors],
            'text': self.to_text()
        }


def typicality_poly(shape):
    _, _, r = rho(shape)
    factors = []
    for pair in sorted_odd_pairs(shape):
        c = bilinear_form(r, root(shape, pair.i, pair.j))
        assert sc.is_integral(c), "non-integral constant %s at %s" % (c, pair)
        factors.append((pair.i, pair.j, c))
    assert len(factors) == shape.m * shape.n
    return TypicalityPolynomial(shape, factors)


def _check_tail_index(shape, i):
    if shape.n < 1 or not (1 <= i <= shape.m):
        raise PreconditionError("index i=%s out of range for %s" % (i, shape))


def _tail_sum(shape, i):
    w = zero_weight(shape)
    for k in range(1, i + 1):
        w = w + root(shape, k, shape.size)
    return w


def weight_after_odd_tail(shape, i):
    """The shift ``alpha_i = -2 rho_1 + sum_{k<=i} (eps_k - eps_{m+n})``."""
    _check_tail_index(shape, i)
    _, rho1, _ = rho(shape)
    alpha = rho1.scale(-2) + _tail_sum(shape, i)
    assert alpha.is_integral()
    return alpha


def check_formula_1(shape, i):
    """Checks ``(-rho_0 - rho_1 + sum_{k<=i}(eps_k - eps_{m+n}),
    eps_i - eps_{m+n}) = 0`` exactly."""
    _check_tail_index(shape, i)
    rho0, rho1, _ = rho(shape)
    w = -rho0 - rho1 + _tail_sum(shape, i)
    return bilinear_form(w, root(shape, i, shape.size)) == 0


def tail_pairing_matches(shape, i):
    """Checks ``(lambda + alpha_i, eps_i - eps_{m+n}) = (lambda + rho,
    eps_i - eps_{m+n})`` for symbolic ``lambda``."""
    _check_tail_index(shape, i)
    lam = symbolic_weight(shape)
    beta = root(shape, i, shape.size)
    _, _, r = rho(shape)
    lhs = bilinear_form(lam + weight_after_odd_tail(shape, i), beta)
    rhs = bilinear_form(lam + r, beta)
    return sp.expand(lhs - rhs) == 0


def _reduction_vector(shape):
    top = shape.size
    w = zero_weight(shape)
    for k in range(shape.m + 1, top + 1):
        w = w + root(shape, k, top)
    for k in range(1, shape.m + 1):
        w = w - root(shape, k, top)
    return w


def check_rho_reduction(shape, i, j):
    """Checks that the correction term between ``rho(m,n)`` and
    ``rho(m,n-1)`` pairs to zero with ``eps_i - eps_j`` for
    ``i <= m < j < m + n``."""
    if not (1 <= i <= shape.m < j < shape.size):
        raise PreconditionError("(%s,%s) out of range for %s" % (i, j, shape))
    return bilinear_form(_reduction_vector(shape), root(shape, i, j)) == 0


def rho_recursion_holds(shape):
    """Checks ``rho(m,n) = rho(m,n-1) + 1/2 [sum_{k>m}(eps_k - eps_{m+n}) -
    sum_{k<=m}(eps_k - eps_{m+n})]``, padding ``rho(m,n-1)`` with a zero."""
    if shape.n < 1 or shape.size < 2:
        raise PreconditionError("no smaller shape below %s" % shape)
    smaller = Shape(shape.m, shape.n - 1)
    _, _, r_small = rho(smaller)
    padded = Weight(shape, list(r_small.coords) + [0])
    _, _, r = rho(shape)
    return r == padded + _reduction_vector(shape).scale(sp.Rational(1, 2))


def verify_identities(max_size):
    """Checks the exact identities of this module on every shape with
    ``m, n >= 1`` and ``m + n <= max_size``.

    Returns:
        dict[str, object]: Number of shapes and checks, and the failed checks.
    """
    failures = []
    num_checks = 0
    num_shapes = 0
    for size in range(2, max_size + 1):
        for m in range(1, size):
            shape = Shape(m, size - m)
            num_shapes += 1
            checks = [('rho_recursion', None, rho_recursion_holds(shape))]
            # constants are asserted integral on construction.
            typicality_poly(shape)
            for i in range(1, shape.m + 1):
                checks.append(('formula_1', [i], check_formula_1(shape, i)))
                checks.append(
                    ('tail_pairing', [i], tail_pairing_matches(shape, i)))
                for j in range(shape.m + 1, shape.size):
                    checks.append(('rho_reduction', [i, j],
                                   check_rho_reduction(shape, i, j)))
            num_checks += len(checks)
            for (name, args, ok) in checks:
                if not ok:
                    failures.append({
                        'shape': shape.to_json(),
                        'check': name,
                        'args': args
                    })
    return {
        'max_size': max_size,
        'num_shapes': num_shapes,
        'num_checks': num_checks,
        'failures': failures,
        'ok': len(failures) == 0
    }
