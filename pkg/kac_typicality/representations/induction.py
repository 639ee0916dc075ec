"""Induced modules by structural recursion.

A module induced from a base module ``B`` of a subalgebra ``P`` has basis
``y_1^{k_1} ... y_r^{k_r} (x) b`` where ``y_1, ..., y_r`` span a complement
of ``P`` that is closed under the bracket, and ``0 <= k_t <= max_t``. A
generator acts on such a vector by moving past the first factor of the
monomial and recursing, using ``x y = (-1)^{|x||y|} y x + [x, y]``.

Truncation is valid because ``y^{max + 1} = 0`` in the reduced enveloping
algebra for every generator used below: even root vectors have ``y^p = 0``
since the p-character vanishes on them, and odd ones have ``y^2 = 0``.
"""
import itertools

import numpy as np

import kac_typicality.rootdata as rd
import kac_typicality.superpbw as pbw
import kac_typicality.representations.common as cm
from kac_typicality.errors import PreconditionError


class InducedModuleBuilder:
    """Builds the action matrices of an induced module.

    Args:
        shape (rootdata.Shape): Shape of the ambient algebra.
        fq (scalars.FqField): Field of the entries.
        lowering (list[tuple[int, int]]): The generators ``y_1, ..., y_r``,
            in the order of the monomials.
        max_exponents (list[int]): Largest exponent of each generator.
        base_actions (dict[tuple[int, int], galois.FieldArray]): Action of
            the subalgebra on the base module; elements of the subalgebra
            that are absent act by zero.
        base_grading (list[int]): Parity of the base basis vectors.
        acting (list[tuple[int, int]]): Matrix units whose matrices are
            built; each must be a generator or lie in the subalgebra.
    """

    def __init__(self, shape, fq, lowering, max_exponents, base_actions,
                 base_grading, acting):
        assert len(lowering) == len(max_exponents)
        self.shape = shape
        self.fq = fq
        self.lowering = list(lowering)
        self.index = {y: t for (t, y) in enumerate(self.lowering)}
        self.max_exponents = list(max_exponents)
        self.base_actions = base_actions
        self.base_grading = list(base_grading)
        self.base_dim = len(self.base_grading)
        self.acting = list(acting)

        self.monomials = list(
            itertools.product(*[range(k + 1) for k in self.max_exponents]))
        self.block = {mono: i for (i, mono) in enumerate(self.monomials)}
        self._left_memo = {}
        self._act_memo = {}
        self._identity = fq.identity(self.base_dim)
        self._zero = fq.zeros((self.base_dim, self.base_dim))

    def _sign(self, x, y):
        odd = pbw.element_parity(self.shape, x) and pbw.element_parity(
            self.shape, y)
        return -1 if odd else 1

    def left_mult(self, t, mono):
        """``y_t * mono`` as a dict from monomials to integers."""
        key = (t, mono)
        if key in self._left_memo:
            return self._left_memo[key]

        nz = [s for s in range(len(mono)) if mono[s] > 0]
        out = {}
        if len(nz) == 0 or t <= nz[0]:
            if mono[t] < self.max_exponents[t]:
                out[mono[:t] + (mono[t] + 1,) + mono[t + 1:]] = 1
        else:
            u = nz[0]
            x, y = self.lowering[t], self.lowering[u]
            rest = mono[:u] + (mono[u] - 1,) + mono[u + 1:]
            sign = self._sign(x, y)
            for mono2, c2 in self.left_mult(t, rest).items():
                for mono3, c3 in self.left_mult(u, mono2).items():
                    out[mono3] = out.get(mono3, 0) + sign * c2 * c3
            for z, cz in pbw.supercommutator(self.shape, x, y).items():
                assert z in self.index, "generators are not closed: %s" % (z,)
                for mono2, c2 in self.left_mult(self.index[z], rest).items():
                    out[mono2] = out.get(mono2, 0) + cz * c2
            out = {k: v for (k, v) in out.items() if v != 0}
        self._left_memo[key] = out
        return out

    def act(self, x, mono):
        """``x * (mono (x) b)`` for all base vectors ``b`` at once.

        Returns:
            dict[tuple, galois.FieldArray]: Map from monomials to operators on
            the base module.
        """
        key = (x, mono)
        if key in self._act_memo:
            return self._act_memo[key]

        out = {}

        def add(m, A):
            out[m] = out[m] + A if m in out else A

        if x in self.index:
            for mono2, c in self.left_mult(self.index[x], mono).items():
                add(mono2, self.fq.from_int(c) * self._identity)
        else:
            nz = [s for s in range(len(mono)) if mono[s] > 0]
            if len(nz) == 0:
                add(mono, self.base_actions.get(x, self._zero))
            else:
                u = nz[0]
                y = self.lowering[u]
                rest = mono[:u] + (mono[u] - 1,) + mono[u + 1:]
                sign = self.fq.from_int(self._sign(x, y))
                for mono2, A in self.act(x, rest).items():
                    for mono3, c3 in self.left_mult(u, mono2).items():
                        add(mono3, sign * self.fq.from_int(c3) * A)
                for z, cz in pbw.supercommutator(self.shape, x, y).items():
                    for mono2, A in self.act(z, rest).items():
                        add(mono2, self.fq.from_int(cz) * A)
        self._act_memo[key] = out
        return out

    def matrix(self, x):
        d = self.base_dim
        X = self.fq.zeros((len(self.monomials) * d, len(self.monomials) * d))
        for mono in self.monomials:
            col = self.block[mono] * d
            for mono2, A in self.act(x, mono).items():
                row = self.block[mono2] * d
                X[row:row + d, col:col + d] += A
        return X

    def grading(self):
        out = []
        for mono in self.monomials:
            par = sum(k * pbw.element_parity(self.shape, y)
                      for (k, y) in zip(mono, self.lowering))
            out.extend([(par + g) % 2 for g in self.base_grading])
        return out

    def build(self, pchar, name):
        actions = {x: self.matrix(x) for x in self.acting}
        M = cm.GModule(self.shape, self.fq, actions, self.grading(), pchar,
                       name=name)
        return M.check()


def _even_lowering(shape):
    units = [x for x in cm.even_matrix_units(shape) if x[0] > x[1]]
    return sorted(units, key=lambda x: pbw.normal_order_key(shape, x))


def _check_pchar(pchar, lam):
    if pchar.shape != lam.shape or pchar.fq != lam.fq:
        raise PreconditionError("p-character and weight do not match")
    p = lam.fq.p
    for a in lam.shape.indices():
        x = lam.coord(a)
        if x**p - x != pchar.value((a, a))**p:
            raise PreconditionError(
                "lambda_%d = %d does not satisfy x^p - x = chi(e_%d%d)^p" %
                (a, int(x), a, a))


def baby_verma_g0(lam, pchar):
    """Baby Verma module of the even part ``gl(m) + gl(n)``.

    Induced from the one-dimensional module of its Borel subalgebra where
    ``e_aa`` acts by ``lambda_a`` and the positive root vectors act by zero.
    The generator is the first basis vector.

    Args:
        lam (common.ModLambda): Highest weight.
        pchar (common.PChar): p-character, zero on root vectors.

    Returns:
        common.GModule: Module of dimension ``p^N`` for ``N`` the number of
        even positive roots.
    """
    _check_pchar(pchar, lam)
    shape, fq = lam.shape, lam.fq
    lowering = _even_lowering(shape)
    base_actions = {(a, a): fq(np.array([[lam.coords[a - 1]]], dtype=np.int64))
                    for a in shape.indices()}
    builder = InducedModuleBuilder(shape, fq, lowering,
                                   [fq.p - 1] * len(lowering), base_actions,
                                   [0], cm.even_matrix_units(shape))
    M = builder.build(pchar, "Z0(%s)" % (lam.to_json(),))
    assert M.dim == fq.p**len(shape.even_positive_pairs())
    return M


def induce_kac(M0, pchar):
    """Kac module ``u(g) (x)_{u(g0 + g1)} M0``, with ``g1`` killing ``M0``.

    The basis is ``f_I (x) v_s`` for subsets ``I`` of odd pairs, ``f_I``
    taken in increasing pair order.
    """
    shape, fq = M0.shape, M0.fq
    lowering = cm.odd_negative_units(shape)
    acting = cm.all_matrix_units(shape)
    builder = InducedModuleBuilder(shape, fq, lowering, [1] * len(lowering),
                                   M0.actions, M0.grading, acting)
    K = builder.build(pchar, "K(%s)" % (M0.name,))
    assert K.dim == 2**(shape.m * shape.n) * M0.dim
    return K


def u_g1_regular_module(shape, fq):
    """``u(g1)`` acting on itself by left multiplication.

    The basis is ``e_I`` for subsets ``I`` of odd pairs, ``e_I`` taken in
    decreasing pair order; the unit is the first basis vector and
    ``e_{all pairs}`` the last.
    """
    lowering = sorted(cm.odd_positive_units(shape),
                      key=lambda x: pbw.normal_order_key(shape, x))
    builder = InducedModuleBuilder(shape, fq, lowering, [1] * len(lowering), {},
                                   [0], lowering)
    U = builder.build(cm.PChar.zero(shape, fq), "u(g1)")
    assert U.dim == 2**(shape.m * shape.n)
    return U


def f_top_operator(K):
    """Matrix of multiplication by ``f_I`` on ``K``, ``I`` all odd pairs."""
    w = pbw.make_fI(K.shape, rd.sorted_odd_pairs(K.shape))
    return K.word_matrix(w.factors)
