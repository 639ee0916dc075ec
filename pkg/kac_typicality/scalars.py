"""Exact scalars and dense exact linear algebra.

Two scalar rings are used in the package:

* ``sympy.Rational`` for the symbolic layer (weights have half-integer
  coordinates because of ``rho``);
* elements of finite fields ``GF(p^k)`` for the modular layer, realized as
  ``galois`` field arrays. A 0-dimensional field array plays the role of a
  single field element.

Matrices over either ring are row reduced exactly; over finite fields the
``galois`` row reduction is used, over the rationals the ``sympy`` one.
"""
import numpy as np
import sympy as sp
import galois

from kac_typicality.errors import PreconditionError

# fields up to this order solve Artin-Schreier equations by enumeration.
MAX_ENUMERATION_ORDER = 10**6


def parse_rational(s):
    """Parses ``"a"`` or ``"a/b"`` into an exact rational.

    Args:
        s (str): Text to parse.

    Returns:
        sympy.Rational: The parsed value, in lowest terms.
    """
    s = s.strip()
    try:
        if '/' in s:
            num_s, den_s = s.split('/')
            num, den = int(num_s), int(den_s)
        else:
            num, den = int(s), 1
    except ValueError:
        raise PreconditionError("malformed rational: %r" % s)
    if den == 0:
        raise PreconditionError("zero denominator: %r" % s)
    return sp.Rational(num, den)


def to_rational(x):
    if isinstance(x, str):
        return parse_rational(x)
    return sp.Rational(x)


def rational_to_string(r):
    r = sp.Rational(r)
    return "%d/%d" % (r.p, r.q)


def is_integral(r):
    return sp.Rational(r).q == 1


class FqField:
    """The finite field with ``p^k`` elements, ``p`` an odd prime.

    The modulus is the lexicographically smallest monic irreducible
    polynomial of degree ``k`` over ``GF(p)``, so that integer representations
    of elements are the same across runs. For ``k = 1`` the modulus is ``x``
    and the field is the prime field.

    Elements are ``galois`` scalars. The integer representation of an element
    is ``sum_i c_i p^i`` where ``c_i`` is the coefficient of ``x^i``; elements
    of the prime subfield are represented by ``0, ..., p - 1``.

    Args:
        p (int): Odd prime.
        k (int, optional): Degree of the extension.
    """

    def __init__(self, p, k=1):
        if int(p) != p or p < 3 or not galois.is_prime(int(p)):
            raise PreconditionError(
                "the characteristic must be an odd prime, got %s" % (p,))
        if int(k) != k or k < 1:
            raise PreconditionError("the degree must be positive, got %s" %
                                    (k,))
        self.p = int(p)
        self.k = int(k)
        self.order = self.p**self.k
        self.modulus = galois.irreducible_poly(self.p, self.k, method='min')
        assert self.modulus.is_irreducible()
        if self.k == 1:
            self.GF = galois.GF(self.p)
        else:
            self.GF = galois.GF(self.order, irreducible_poly=self.modulus)

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.k)

    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.k) == (other.p,
                                                                   other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __call__(self, x):
        return self.GF(x)

    def from_int(self, c):
        """Image of the integer ``c`` in the prime subfield."""
        return self.GF(int(c) % self.p)

    def from_coeffs(self, coeffs):
        """Element with the given coefficients, lowest degree first."""
        assert len(coeffs) == self.k
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + (int(c) % self.p)
        return self.GF(v)

    def coeffs(self, x):
        v = int(x)
        out = []
        for _ in range(self.k):
            out.append(v % self.p)
            v //= self.p
        return out

    def elements(self):
        return self.GF(np.arange(self.order))

    def zeros(self, shape):
        return self.GF.Zeros(shape)

    def identity(self, n):
        return self.GF.Identity(n)

    def frobenius(self, x, times=1):
        return x**(self.p**times)

    def is_in_prime_subfield(self, x):
        return bool(x**self.p == x)

    def absolute_trace(self, x):
        """Trace of ``x`` down to the prime subfield, as an integer."""
        t = self.GF(0)
        y = x
        for _ in range(self.k):
            t = t + y
            y = y**self.p
        assert int(t) < self.p
        return int(t)

    def to_json(self):
        return {
            'p': self.p,
            'k': self.k,
            'order': self.order,
            'modulus': [int(c) for c in self.modulus.coeffs]
        }


_field_cache = {}


def fq_make(p, k=1):
    """Returns the (cached) field of order ``p^k``.

    Args:
        p (int): Odd prime.
        k (int, optional): Degree of the extension over the prime field.

    Returns:
        FqField: The field, with its deterministic modulus.
    """
    key = (int(p), int(k))
    if key not in _field_cache:
        _field_cache[key] = FqField(p, k)
    return _field_cache[key]


def artin_schreier_solve(fq, c):
    """All roots of ``x^p - x = c`` in ``fq``.

    The solution set is empty or a coset of the prime field, so the result
    has either ``0`` or ``p`` elements. Small fields are enumerated; larger
    ones use the trace criterion and a linear solve, since ``x -> x^p - x`` is
    linear over the prime field.

    Args:
        fq (FqField): Ambient field.
        c (galois.FieldArray or int): Right-hand side.

    Returns:
        list[galois.FieldArray]: The roots, sorted by integer representation.
    """
    c = fq(int(c))
    if fq.order <= MAX_ENUMERATION_ORDER:
        xs = fq.elements()
        mask = (xs**fq.p - xs) == c
        roots = [xs[i] for i in np.nonzero(mask)[0]]
    else:
        roots = _artin_schreier_by_linear_algebra(fq, c)
    assert len(roots) in (0, fq.p)
    return roots


def _artin_schreier_by_linear_algebra(fq, c):
    if fq.absolute_trace(c) != 0:
        return []
    prime_field = galois.GF(fq.p)
    cols = []
    for i in range(fq.k):
        b = fq.from_coeffs([1 if t == i else 0 for t in range(fq.k)])
        cols.append(fq.coeffs(b**fq.p - b))
    aug = np.column_stack([np.array(cols, dtype=np.int64).T,
                           np.array(fq.coeffs(c), dtype=np.int64)])
    R = row_reduce(prime_field(aug))
    pivots = pivot_columns(R)
    # the trace test guarantees consistency.
    assert fq.k not in pivots
    y = [0] * fq.k
    for r, col in enumerate(pivots):
        y[col] = int(R[r, fq.k])
    y0 = fq.from_coeffs(y)
    roots = [y0 + fq.from_int(t) for t in range(fq.p)]
    return sorted(roots, key=int)


### exact linear algebra; matrices act on column vectors and bases are rows.
def is_field_array(A):
    return isinstance(A, galois.FieldArray)


def row_reduce(A):
    if is_field_array(A):
        if A.shape[0] == 0 or A.shape[1] == 0:
            return A.copy()
        return A.row_reduce()
    else:
        return A.rref()[0]


def pivot_columns(R):
    """Pivot columns of a matrix in reduced row echelon form."""
    pivots = []
    for r in range(R.shape[0]):
        row = R[r, :]
        nz = [c for c in range(R.shape[1]) if row[c] != 0]
        if len(nz) == 0:
            break
        pivots.append(nz[0])
    return pivots


def nonzero_rows(A):
    if is_field_array(A):
        return A[np.any(A != 0, axis=1)]
    else:
        keep = [r for r in range(A.rows) if any(x != 0 for x in A.row(r))]
        return A.extract(keep, list(range(A.cols)))


def rank(A):
    if is_field_array(A):
        if A.size == 0:
            return 0
        return int(np.linalg.matrix_rank(A))
    else:
        return A.rank()


def kernel(A):
    """Basis of ``{x : A x = 0}``, one vector per row.

    Returns:
        galois.FieldArray or sympy.Matrix: Matrix of shape
        ``(cols - rank, cols)``.
    """
    if not is_field_array(A):
        ns = A.nullspace()
        if len(ns) == 0:
            return sp.zeros(0, A.cols)
        return sp.Matrix.hstack(*ns).T

    GF = type(A)
    num_cols = A.shape[1]
    R = row_reduce(A) if A.shape[0] > 0 else GF.Zeros((0, num_cols))
    pivots = pivot_columns(R)
    free = [c for c in range(num_cols) if c not in pivots]
    basis = GF.Zeros((len(free), num_cols))
    for t, f in enumerate(free):
        basis[t, f] = 1
        for r, col in enumerate(pivots):
            basis[t, col] = -R[r, f]
    return basis


def echelon_basis(rows):
    """Reduced echelon basis (nonzero rows only) of the span of ``rows``."""
    return nonzero_rows(row_reduce(rows))


def reduce_modulo(X, B, pivots=None):
    """Reduces the rows of ``X`` modulo the row space of ``B``.

    ``B`` must be in reduced row echelon form without zero rows; the result
    vanishes at the pivot columns of ``B``.
    """
    if B.shape[0] == 0:
        return X
    if pivots is None:
        pivots = pivot_columns(B)
    return X - X[:, pivots] @ B


def in_span(B, v):
    r = reduce_modulo(v.reshape((1, -1)), B)
    return not bool(np.any(r != 0))


class ExactMatrix:
    """Dense matrix over the rationals or a finite field.

    Args:
        rows (list[list[object]]): Entries, row by row. Over a finite field,
            integers are taken as integer representations of field elements.
        fq (FqField, optional): Field of the entries. ``None`` means the
            rationals.
    """

    def __init__(self, rows, fq=None):
        self.fq = fq
        if isinstance(rows, (sp.MatrixBase, galois.FieldArray)):
            self.entries = rows
        elif fq is None:
            self.entries = sp.Matrix([[to_rational(x) for x in row]
                                      for row in rows])
        else:
            a = np.array(rows, dtype=np.int64)
            self.entries = fq(a.reshape((len(rows), -1)))

    @property
    def shape(self):
        return tuple(self.entries.shape)

    def rank(self):
        return rank(self.entries)

    def kernel(self):
        return ExactMatrix(kernel(self.entries), self.fq)

    def row_reduce(self):
        return ExactMatrix(row_reduce(self.entries), self.fq)

    def nullity(self):
        return self.shape[1] - self.rank()

    def contains(self, v):
        """Checks whether ``v`` lies in the row space."""
        if self.fq is None:
            M = sp.Matrix.vstack(self.entries, sp.Matrix([list(v)]))
            return M.rank() == self.rank()
        return in_span(echelon_basis(self.entries), self.fq(np.asarray(v)))

    def rows(self):
        return [list(self.entries[r, :]) for r in range(self.shape[0])]

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.fq == other.fq and
                self.shape == other.shape and
                bool(np.all(np.array(self.rows(), dtype=object) == np.array(
                    other.rows(), dtype=object))))
