import numpy as np

import kac_typicality.rootdata as rd
import kac_typicality.scalars as sc
import kac_typicality.superpbw as pbw
from kac_typicality.errors import PreconditionError, ConstructionError


class PChar:
    """A p-character supported on the diagonal of the even part.

    ``chi(e_aa)`` is given by ``values[a - 1]``; every root vector has value
    zero. ``chi = 0`` is the restricted case.

    Args:
        shape (rootdata.Shape): Shape of the algebra.
        fq (scalars.FqField): Field of the values.
        values (list[int]): Integer representations of the diagonal values.
    """

    def __init__(self, shape, fq, values):
        if len(values) != shape.size:
            raise PreconditionError("expected %d values of chi, got %d" %
                                    (shape.size, len(values)))
        self.shape = shape
        self.fq = fq
        self.values = tuple(int(v) for v in values)
        for v in self.values:
            if not (0 <= v < fq.order):
                raise PreconditionError("chi value %d is not an element of %s" %
                                        (v, fq))

    @staticmethod
    def zero(shape, fq):
        return PChar(shape, fq, [0] * shape.size)

    @staticmethod
    def from_ints(shape, fq, ints):
        """Images of (possibly negative) integers in the prime subfield."""
        return PChar(shape, fq, [int(fq.from_int(c)) for c in ints])

    def value(self, x):
        if x[0] == x[1]:
            return self.fq(self.values[x[0] - 1])
        return self.fq(0)

    def h_alpha_value(self, i, j):
        (a, _), (b, _) = rd.h_alpha(self.shape, i, j)
        return self.value((a, a)) + self.value((b, b))

    def is_zero(self):
        return all(v == 0 for v in self.values)

    def to_json(self):
        return {'values': list(self.values)}


class ModLambda:
    """A weight with coordinates in a finite field (integer representations)."""

    def __init__(self, shape, fq, coords):
        if len(coords) != shape.size:
            raise PreconditionError("expected %d coordinates, got %d" %
                                    (shape.size, len(coords)))
        self.shape = shape
        self.fq = fq
        self.coords = tuple(int(c) for c in coords)

    def as_array(self):
        return self.fq(np.array(self.coords, dtype=np.int64))

    def coord(self, a):
        return self.fq(self.coords[a - 1])

    def h_alpha_value(self, i, j):
        return self.coord(i) + self.coord(j)

    def is_restricted(self):
        return all(c < self.fq.p for c in self.coords)

    def to_json(self):
        return list(self.coords)


def all_matrix_units(shape):
    return [(a, b) for a in shape.indices() for b in shape.indices()]


def even_matrix_units(shape):
    return [x for x in all_matrix_units(shape) if pbw.element_parity(shape, x) == 0]


def odd_positive_units(shape):
    return [p.as_tuple() for p in rd.sorted_odd_pairs(shape)]


def odd_negative_units(shape):
    return [(p.j, p.i) for p in rd.sorted_odd_pairs(shape)]


def matrix_power(X, k):
    out = type(X).Identity(X.shape[0])
    for _ in range(k):
        out = out @ X
    return out


class GModule:
    """A finite-dimensional module over ``gl(m,n)`` or a subalgebra.

    One matrix per acting matrix unit; matrices act on column vectors. The
    basis consists of weight vectors, so the matrices of ``e_aa`` are
    diagonal.

    Args:
        shape (rootdata.Shape): Shape of the ambient algebra.
        fq (scalars.FqField): Field of the entries.
        actions (dict[tuple[int, int], galois.FieldArray]): Matrix of each
            acting matrix unit.
        grading (list[int]): Parity of each basis vector.
        pchar (PChar): p-character through which the module is reduced.
        name (str, optional): Label used in logs.
    """

    def __init__(self, shape, fq, actions, grading, pchar, name=None):
        self.shape = shape
        self.fq = fq
        self.actions = actions
        self.grading = [int(g) for g in grading]
        self.pchar = pchar
        self.name = name
        self.dim = len(self.grading)
        self.acting = sorted(actions.keys())
        for X in actions.values():
            assert X.shape == (self.dim, self.dim)

    def action(self, x):
        return self.actions[x]

    def acts_by(self, x):
        return x in self.actions

    def positive_units(self):
        return [x for x in self.acting if x[0] < x[1]]

    def weight(self, i):
        """Weight of the ``i``-th basis vector, as integer representations."""
        return tuple(
            int(self.actions[(a, a)][i, i])
            for a in self.shape.indices()
            if (a, a) in self.actions)

    def weights(self):
        return [self.weight(i) for i in range(self.dim)]

    def weight_spaces(self):
        """Map from weight to the indices of the basis vectors of that weight,
        in sorted order of weights."""
        d = {}
        for i, w in enumerate(self.weights()):
            d.setdefault(w, []).append(i)
        return {w: d[w] for w in sorted(d)}

    def word_matrix(self, factors):
        X = self.fq.identity(self.dim)
        for x in factors:
            X = X @ self.actions[x]
        return X

    def element_matrix(self, element):
        """Matrix of a ``superpbw.PBWElement`` or ``SuperWord``."""
        if isinstance(element, pbw.SuperWord):
            return self.fq.from_int(element.coefficient) * self.word_matrix(
                element.factors)
        X = self.fq.zeros((self.dim, self.dim))
        for mono, c in element.terms.items():
            X = X + self.fq.from_int(c) * self.word_matrix(mono)
        return X

    def check_representation(self):
        for x in self.acting:
            for y in self.acting:
                X, Y = self.actions[x], self.actions[y]
                sign = -1 if (pbw.element_parity(self.shape, x) and
                              pbw.element_parity(self.shape, y)) else 1
                lhs = X @ Y - self.fq.from_int(sign) * (Y @ X)
                rhs = self.fq.zeros((self.dim, self.dim))
                for z, c in pbw.supercommutator(self.shape, x, y).items():
                    if z not in self.actions:
                        raise ConstructionError(
                            "[%s, %s] leaves the acting algebra" % (x, y))
                    rhs = rhs + self.fq.from_int(c) * self.actions[z]
                if np.any(lhs != rhs):
                    raise ConstructionError(
                        "%s: bracket relation fails for %s, %s" %
                        (self.name, x, y))

    def check_p_character(self):
        p = self.fq.p
        identity = self.fq.identity(self.dim)
        for x in self.acting:
            if pbw.element_parity(self.shape, x) == 1:
                continue
            X = self.actions[x]
            # e_aa^[p] = e_aa and e_ab^[p] = 0 for a != b.
            lhs = matrix_power(X, p)
            if x[0] == x[1]:
                lhs = lhs - X
            rhs = self.pchar.value(x)**p * identity
            if np.any(lhs != rhs):
                raise ConstructionError("%s: p-character relation fails for %s" %
                                        (self.name, x))

    def check_grading(self):
        for x in self.acting:
            par = pbw.element_parity(self.shape, x)
            rows, cols = np.nonzero(self.actions[x] != 0)
            for i, j in zip(rows, cols):
                if self.grading[i] != (self.grading[j] + par) % 2:
                    raise ConstructionError("%s: %s does not respect the grading"
                                            % (self.name, x))

    def check(self):
        self.check_grading()
        self.check_representation()
        self.check_p_character()
        return self

    def to_json(self):
        return {
            'name': self.name,
            'shape': self.shape.to_json(),
            'field': self.fq.to_json(),
            'dim': self.dim,
            'grading': list(self.grading),
            'pchar': self.pchar.to_json()
        }


def restrict_to_subspace(X, B):
    """Matrix of ``X`` on the ``X``-stable row space of ``B`` (reduced
    echelon form, no zero rows), in the basis given by the rows of ``B``."""
    pivots = sc.pivot_columns(B)
    images = B @ X.T
    assert not np.any(sc.reduce_modulo(images, B, pivots) != 0), (
        "subspace is not stable")
    return images[:, pivots].T
