"""Straightening in the enveloping algebra of gl(m,n).

A matrix unit ``e_{ab}`` is the tuple ``(a, b)``; ``f_{ij}`` stands for
``e_{ji}``. A monomial is a tuple of matrix units and a linear combination
is a dict from monomials to integers.

Normal order is ``N- < H < N+``. Inside ``N-`` the odd ``f_{ij}`` come first,
increasing in the order on odd pairs, followed by the even ``f_{ab} = e_{ba}``
sorted by ``(a, b)``; ``H`` is sorted by index; inside ``N+`` the even
``e_{ab}`` come first sorted by ``(a, b)``, followed by the odd ``e_{ij}`` in
decreasing order on odd pairs. With this order, ``f_I`` and ``e_I`` are
normal words.
"""
import sympy as sp

import kac_typicality.rootdata as rd
from kac_typicality.errors import PreconditionError, ResourceCapError

DEFAULT_CAP_TERMS = 6


def element_parity(shape, x):
    return shape.parity(x[0], x[1])


def element_part(x):
    if x[0] > x[1]:
        return 'neg'
    elif x[0] == x[1]:
        return 'diag'
    else:
        return 'pos'


def element_text(x):
    a, b = x
    if a == b:
        return "h %d" % a
    elif a < b:
        return "e %d %d" % (a, b)
    else:
        return "f %d %d" % (b, a)


def normal_order_key(shape, x):
    a, b = x
    odd = element_parity(shape, x)
    if a > b:
        return (0, 0, -a, b) if odd else (0, 1, b, a)
    elif a == b:
        return (1, 0, a, 0)
    else:
        return (2, 1, b, -a) if odd else (2, 0, a, b)


def word_weight(shape, factors):
    """Adjoint weight ``sum (eps_row - eps_col)`` of a product."""
    w = rd.zero_weight(shape)
    for (a, b) in factors:
        w = w + rd.root(shape, a, b)
    return w


def word_parity(shape, factors):
    return sum(element_parity(shape, x) for x in factors) % 2


def supercommutator(shape, a, b):
    """``[a, b] = ab - (-1)^{|a||b|} ba`` for matrix units.

    Returns:
        dict[tuple[int, int], int]: The bracket as a combination of matrix
        units.
    """
    sign = -1 if element_parity(shape, a) and element_parity(shape, b) else 1
    out = {}
    if a[1] == b[0]:
        z = (a[0], b[1])
        out[z] = out.get(z, 0) + 1
    if b[1] == a[0]:
        z = (b[0], a[1])
        out[z] = out.get(z, 0) - sign
    return {z: c for (z, c) in out.items() if c != 0}


def _accumulate(out, mono, c):
    v = out.get(mono, 0) + c
    if v == 0:
        if mono in out:
            del out[mono]
    else:
        out[mono] = v


class Straightener:
    """Rewrites words into normal order.

    A word is normalized right to left: the suffix is normalized first and
    the leading letter is then inserted into each resulting monomial with
    ``xy = (-1)^{|x||y|} yx + [x, y]``, and ``x x = 0`` for odd ``x``.
    Each rewrite either sorts one more letter or lowers the length of the
    word, so the recursion terminates. Results are memoized per instance.

    Args:
        shape (rootdata.Shape): Shape of the algebra.
    """

    def __init__(self, shape):
        self.shape = shape
        self._insert_memo = {}
        self._word_memo = {}
        self._keys = {}
        self._brackets = {}

    def key(self, x):
        if x not in self._keys:
            self._keys[x] = normal_order_key(self.shape, x)
        return self._keys[x]

    def is_odd(self, x):
        return element_parity(self.shape, x) == 1

    def bracket(self, x, y):
        if (x, y) not in self._brackets:
            self._brackets[(x, y)] = supercommutator(self.shape, x, y)
        return self._brackets[(x, y)]

    def is_normal(self, mono):
        keys = [self.key(x) for x in mono]
        for t in range(len(mono) - 1):
            if keys[t] > keys[t + 1]:
                return False
            if keys[t] == keys[t + 1] and self.is_odd(mono[t]):
                return False
        return True

    def normalize_word(self, word):
        word = tuple(word)
        if len(word) == 0:
            return {(): 1}
        if word in self._word_memo:
            return self._word_memo[word]

        out = {}
        for mono, c in self.normalize_word(word[1:]).items():
            for mono2, c2 in self.insert(word[0], mono).items():
                _accumulate(out, mono2, c * c2)
        self._word_memo[word] = out
        return out

    def insert(self, x, mono):
        """Normal form of ``x * mono`` for a normal monomial ``mono``."""
        if (x, mono) in self._insert_memo:
            return self._insert_memo[(x, mono)]

        if len(mono) == 0:
            out = {(x,): 1}
        else:
            y = mono[0]
            kx, ky = self.key(x), self.key(y)
            if kx < ky or (kx == ky and not self.is_odd(x)):
                out = {(x,) + mono: 1}
            elif kx == ky:
                # odd squares vanish.
                out = {}
            else:
                sign = -1 if self.is_odd(x) and self.is_odd(y) else 1
                out = {}
                for mono2, c2 in self.insert(x, mono[1:]).items():
                    for mono3, c3 in self.insert(y, mono2).items():
                        _accumulate(out, mono3, sign * c2 * c3)
                for z, cz in self.bracket(x, y).items():
                    for mono2, c2 in self.insert(z, mono[1:]).items():
                        _accumulate(out, mono2, cz * c2)
        self._insert_memo[(x, mono)] = out
        return out


class SuperWord:
    """An integer multiple of a product of matrix units."""

    def __init__(self, shape, factors, coefficient=1):
        self.shape = shape
        self.factors = tuple(tuple(x) for x in factors)
        self.coefficient = int(coefficient)
        for (a, b) in self.factors:
            shape.check_index(a)
            shape.check_index(b)

    def parity(self):
        return word_parity(self.shape, self.factors)

    def weight(self):
        return word_weight(self.shape, self.factors)

    def __mul__(self, other):
        assert self.shape == other.shape
        return SuperWord(self.shape, self.factors + other.factors,
                         self.coefficient * other.coefficient)

    def __len__(self):
        return len(self.factors)

    def to_text(self):
        parts = [element_text(x) for x in self.factors]
        if self.coefficient != 1 or len(parts) == 0:
            parts = [str(self.coefficient)] + parts
        return " * ".join(parts)

    def __repr__(self):
        return "SuperWord(%s)" % self.to_text()


def parse_word(text, shape):
    """Parses words like ``"e 1 4 * f 2 3"`` or ``"-2 * h 1 * x 2 1"``.

    Factors are ``e i j`` (the matrix unit ``e_ij``), ``f i j`` (``e_ji``),
    ``h i`` (``e_ii``) and ``x a b`` (``e_ab``), separated by ``*``. A bare
    integer in first position is the coefficient.
    """
    factors = []
    coefficient = 1
    chunks = [s.strip() for s in text.strip().split('*')]
    if chunks == ['']:
        return SuperWord(shape, [], 1)
    for t, chunk in enumerate(chunks):
        tokens = chunk.split()
        try:
            if len(tokens) == 1 and t == 0:
                coefficient = int(tokens[0])
            elif len(tokens) == 2 and tokens[0] == 'h':
                a = int(tokens[1])
                factors.append((a, a))
            elif len(tokens) == 3 and tokens[0] in ('e', 'x'):
                factors.append((int(tokens[1]), int(tokens[2])))
            elif len(tokens) == 3 and tokens[0] == 'f':
                factors.append((int(tokens[2]), int(tokens[1])))
            else:
                raise PreconditionError("malformed factor %r in %r" %
                                        (chunk, text))
        except ValueError:
            raise PreconditionError("malformed factor %r in %r" % (chunk, text))
    return SuperWord(shape, factors, coefficient)


class PBWMonomial:
    """A normal monomial split as ``neg * diag * pos``, with ``diag`` given
    by its exponent vector on ``e_11, ..., e_{m+n,m+n}``."""

    def __init__(self, shape, mono):
        self.shape = shape
        self.neg = tuple(x for x in mono if element_part(x) == 'neg')
        self.pos = tuple(x for x in mono if element_part(x) == 'pos')
        self.diag = tuple(
            sum(1 for x in mono if x == (a, a)) for a in shape.indices())

    def to_json(self):
        return {
            'neg': [list(x) for x in self.neg],
            'diag': list(self.diag),
            'pos': [list(x) for x in self.pos]
        }


def _monomial_sort_key(st, mono):
    return (len(mono), [st.key(x) for x in mono])


def monomial_text(mono):
    if len(mono) == 0:
        return "1"
    return " * ".join(element_text(x) for x in mono)


class PBWElement:
    """An integer combination of normal monomials.

    Equal elements have equal ``terms``; zero coefficients never appear.
    """

    def __init__(self, shape, terms):
        self.shape = shape
        self.terms = {}
        for mono, c in terms.items():
            assert int(c) == c, "non-integer coefficient %s" % (c,)
            _accumulate(self.terms, tuple(mono), int(c))

    def is_zero(self):
        return len(self.terms) == 0

    def __eq__(self, other):
        return (isinstance(other, PBWElement) and self.shape == other.shape and
                self.terms == other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            _accumulate(out, mono, c)
        return PBWElement(self.shape, out)

    def scale(self, c):
        return PBWElement(self.shape,
                          {mono: c * v for (mono, v) in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def monomials(self, straightener=None):
        st = straightener if straightener is not None else Straightener(
            self.shape)
        return sorted(self.terms, key=lambda mono: _monomial_sort_key(st, mono))

    def to_words(self):
        return [
            SuperWord(self.shape, mono, c)
            for (mono, c) in sorted(self.terms.items())
        ]

    def to_text(self):
        if self.is_zero():
            return "0"
        parts = []
        for mono in self.monomials():
            c = self.terms[mono]
            parts.append("%d * %s" % (c, monomial_text(mono)) if len(mono) >
                         0 else "%d" % c)
        return " + ".join(parts)

    def to_json(self):
        return {
            'shape':
            self.shape.to_json(),
            'terms': [{
                'monomial': monomial_text(mono),
                'parts': PBWMonomial(self.shape, mono).to_json(),
                'coefficient': str(self.terms[mono])
            } for mono in self.monomials()]
        }


def straighten(words, straightener=None):
    """Normal form of a sum of words.

    Args:
        words (SuperWord or list[SuperWord]): The input.
        straightener (Straightener, optional): Reused to share its memo.

    Returns:
        PBWElement: The straightened element.
    """
    if isinstance(words, SuperWord):
        words = [words]
    assert len(words) > 0
    shape = words[0].shape
    st = straightener if straightener is not None else Straightener(shape)
    out = {}
    for w in words:
        assert w.shape == shape
        for mono, c in st.normalize_word(w.factors).items():
            _accumulate(out, mono, w.coefficient * c)
    return PBWElement(shape, out)


def h_symbols(shape):
    return [sp.Symbol('h%d' % a) for a in shape.indices()]


def _zero_poly(gens):
    return sp.Poly(0, *gens, domain='ZZ')


def _poly_from_exponents(d, gens):
    d = {e: c for (e, c) in d.items() if c != 0}
    if len(d) == 0:
        return _zero_poly(gens)
    return sp.Poly.from_dict(d, *gens, domain='ZZ')


def hc_project(x):
    """Part of ``x`` in ``U(H)``, as an integer polynomial in ``h1, h2, ...``
    (``h_a`` standing for ``e_aa``)."""
    d = {}
    for mono, c in x.terms.items():
        parts = PBWMonomial(x.shape, mono)
        if len(parts.neg) == 0 and len(parts.pos) == 0:
            d[parts.diag] = d.get(parts.diag, 0) + c
    return _poly_from_exponents(d, h_symbols(x.shape))


def act_highest(x):
    """Applies ``x`` to a highest weight vector ``v`` of symbolic weight.

    ``N+`` kills ``v`` and ``e_aa`` acts by ``lambda_a``.

    Returns:
        dict[tuple, sympy.Poly]: Map from the ``N-`` part of each surviving
        monomial to its coefficient, a polynomial in ``lambda1, ...``. Zero
        coefficients are dropped.
    """
    per_neg = {}
    for mono, c in x.terms.items():
        parts = PBWMonomial(x.shape, mono)
        if len(parts.pos) > 0:
            continue
        d = per_neg.setdefault(parts.neg, {})
        d[parts.diag] = d.get(parts.diag, 0) + c

    gens = rd.lambda_symbols(x.shape)
    out = {}
    for neg, d in per_neg.items():
        poly = _poly_from_exponents(d, gens)
        if not poly.is_zero:
            out[neg] = poly
    return out


def _as_pairs(shape, I):
    return [
        p if isinstance(p, rd.OddPair) else rd.OddPair(shape, p[0], p[1])
        for p in I
    ]


def make_fI(shape, I):
    """``f_I``: product of ``f_ij`` over ``I`` in increasing pair order."""
    pairs = sorted(_as_pairs(shape, I))
    return SuperWord(shape, [(p.j, p.i) for p in pairs])


def make_eI(shape, I):
    """``e_I``: product of ``e_ij`` over ``I`` in decreasing pair order."""
    pairs = sorted(_as_pairs(shape, I), reverse=True)
    return SuperWord(shape, [(p.i, p.j) for p in pairs])


def _check_cap(shape, cap_terms):
    cap = DEFAULT_CAP_TERMS if cap_terms is None else cap_terms
    if shape.m * shape.n > cap:
        raise ResourceCapError(
            "%s has m*n = %d odd pairs, above the cap of %d" %
            (shape, shape.m * shape.n, cap))


def _check_balanced_tail(x):
    for mono in x.terms:
        parts = PBWMonomial(x.shape, mono)
        assert (len(parts.neg) == 0) == (len(parts.pos) == 0), (
            "unbalanced term %s" % monomial_text(mono))


def top_element(shape, straightener=None):
    """Straightened ``e_I f_I`` for the set ``I`` of all odd pairs."""
    pairs = rd.sorted_odd_pairs(shape)
    w = make_eI(shape, pairs) * make_fI(shape, pairs)
    return straighten(w, straightener)


def verify_lemma41(shape, i, straightener=None):
    """Checks ``e_{i,m+n} f_{>(i,m+n)} v = 0`` for symbolic highest weight.

    ``f_{>(i,m+n)}`` is ``f_J`` for the odd pairs ``J`` following
    ``(i, m+n)``.
    """
    if shape.n < 1 or not (1 <= i <= shape.m):
        raise PreconditionError("index i=%s out of range for %s" % (i, shape))
    pivot = rd.OddPair(shape, i, shape.size)
    later = [p for p in rd.sorted_odd_pairs(shape) if pivot < p]
    w = SuperWord(shape, [(i, shape.size)]) * make_fI(shape, later)
    return len(act_highest(straighten(w, straightener))) == 0


def verify_theorem(shape, cap_terms=None, straightener=None):
    """Compares the Harish-Chandra part of ``e_I f_I`` on a highest weight
    vector with the typicality polynomial.

    Args:
        shape (rootdata.Shape): Shape of the algebra.
        cap_terms (int, optional): Largest ``m * n`` accepted.

    Returns:
        tuple[sympy.Poly, bool]: ``f(h)(lambda)`` and whether it equals the
        expanded typicality polynomial.
    """
    _check_cap(shape, cap_terms)
    x = top_element(shape, straightener)
    _check_balanced_tail(x)
    act = act_highest(x)
    assert all(len(neg) == 0 for neg in act), "N- part survived on v"
    gens = rd.lambda_symbols(shape)
    f_h = act.get((), _zero_poly(gens))
    return f_h, f_h == rd.typicality_poly(shape).as_poly()


def verify_peeling(shape, cap_terms=None, straightener=None):
    """Checks the first step of the induction on ``n``.

    The value of ``e_I f_I`` on ``v`` must factor as the product of
    ``(lambda + rho, eps_i - eps_{m+n})`` over ``i <= m`` times the value of
    ``e_J f_J``, ``J`` the odd pairs with column below ``m + n``; the latter
    must be the typicality polynomial of ``gl(m,n-1)``.
    """
    _check_cap(shape, cap_terms)
    if shape.m < 1 or shape.n < 1:
        raise PreconditionError("no odd pairs in %s" % shape)
    st = straightener if straightener is not None else Straightener(shape)
    gens = rd.lambda_symbols(shape)
    f_h = act_highest(top_element(shape, st)).get((), _zero_poly(gens))

    J = [p for p in rd.sorted_odd_pairs(shape) if p.j < shape.size]
    w = make_eI(shape, J) * make_fI(shape, J)
    rest = act_highest(straighten(w, st)).get((), _zero_poly(gens))

    lam = rd.symbolic_weight(shape)
    _, _, r = rd.rho(shape)
    peel = sp.Integer(1)
    for i in range(1, shape.m + 1):
        peel *= rd.bilinear_form(lam + r, rd.root(shape, i, shape.size))
    peel = sp.Poly(peel, *gens, domain='ZZ')

    expected_rest = sp.Integer(1)
    if shape.n > 1:
        smaller = rd.typicality_poly(rd.Shape(shape.m, shape.n - 1))
        expected_rest = smaller.as_expr().subs(
            dict(zip(rd.lambda_symbols(smaller.shape), gens)))
    expected_rest = sp.Poly(expected_rest, *gens, domain='ZZ')
    return f_h == peel * rest and rest == expected_rest


def verify_anticommutation(shape, straightener=None):
    """Checks ``f_a f_b + f_b f_a = 0`` for distinct odd pairs ``a``, ``b``."""
    st = straightener if straightener is not None else Straightener(shape)
    pairs = rd.sorted_odd_pairs(shape)
    for a in pairs:
        for b in pairs:
            if a == b:
                continue
            fa = make_fI(shape, [a])
            fb = make_fI(shape, [b])
            if not straighten([fa * fb, fb * fa], st).is_zero():
                return False
    return True


def verify_formula_star(shape, straightener=None):
    """Checks that ``f_I`` commutes with every even root vector."""
    st = straightener if straightener is not None else Straightener(shape)
    f_top = make_fI(shape, rd.sorted_odd_pairs(shape))
    for (a, b) in shape.even_positive_pairs():
        for x in [(b, a), (a, b)]:
            w = SuperWord(shape, [x])
            d = straighten([w * f_top, SuperWord(shape, f_top.factors, -1) * w],
                           st)
            if not d.is_zero():
                return False
    return True
