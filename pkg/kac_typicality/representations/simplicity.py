"""Submodules by spinning singular vectors.

Every routine here assumes that the positive root vectors act nilpotently
and the diagonal matrix units act semisimply, with a basis of weight
vectors. Then a nonzero submodule is a sum of weight spaces and contains a
nonzero singular weight vector, so it is enough to spin singular lines one
weight space at a time.
"""
import itertools

import numpy as np

import kac_typicality.scalars as sc
import kac_typicality.representations.common as cm
from kac_typicality.errors import (PreconditionError, ResourceCapError,
                                   ConstructionError)

DEFAULT_CAP_LINES = 10**5
DEFAULT_CAP_BRUTEFORCE = 4096


def joint_kernel(M, units, columns=None):
    """Basis (rows) of the common kernel of the given actions.

    Args:
        M (common.GModule): The module.
        units (list[tuple[int, int]]): Acting matrix units.
        columns (list[int], optional): If given, the kernel is computed on the
            span of these basis vectors only, and vectors are embedded back.
    """
    cols = list(range(M.dim)) if columns is None else list(columns)
    if len(units) == 0:
        A = M.fq.zeros((0, len(cols)))
    else:
        A = np.concatenate([M.action(x)[:, cols] for x in units], axis=0)
        A = M.fq(A)
    K = sc.kernel(A)
    if columns is None:
        return K
    out = M.fq.zeros((K.shape[0], M.dim))
    out[:, cols] = K
    return out


def singular_space(M):
    """Vectors killed by every positive matrix unit acting on ``M``."""
    return joint_kernel(M, M.positive_units())


def invariants_g1(M):
    """Vectors killed by the odd ``e_ij``."""
    return joint_kernel(M, [x for x in cm.odd_positive_units(M.shape)
                            if M.acts_by(x)])


def invariants_g_minus1(M):
    """Vectors killed by the odd ``f_ij``."""
    return joint_kernel(M, [x for x in cm.odd_negative_units(M.shape)
                            if M.acts_by(x)])


def spin(M, v):
    """Submodule generated by ``v``.

    Returns:
        galois.FieldArray: Reduced echelon basis (rows) of the submodule.
    """
    v = M.fq(np.asarray(v)).reshape((1, M.dim))
    if not np.any(v != 0):
        raise PreconditionError("cannot spin the zero vector")
    B = sc.echelon_basis(v)
    frontier = B
    gens = [M.action(x).T for x in M.acting]
    while frontier.shape[0] > 0:
        images = M.fq(np.concatenate([frontier @ X for X in gens], axis=0))
        new = sc.nonzero_rows(sc.reduce_modulo(images, B))
        if new.shape[0] == 0:
            break
        frontier = sc.echelon_basis(new)
        B = sc.echelon_basis(M.fq(np.concatenate([B, frontier], axis=0)))
    return B


def singular_weight_spaces(M):
    """Singular vectors, one weight at a time.

    Returns:
        list[tuple[tuple, galois.FieldArray]]: Pairs of weight and basis of
        the singular vectors of that weight, for nonzero spaces only.
    """
    out = []
    for w, idx in M.weight_spaces().items():
        K = joint_kernel(M, M.positive_units(), columns=idx)
        if K.shape[0] > 0:
            out.append((w, K))
    return out


def count_lines(q, d):
    return (q**d - 1) // (q - 1)


def iterate_lines(fq, K):
    """Yields one vector per line in the row space of ``K``, with the first
    nonzero coefficient equal to one, in lexicographic order."""
    d = K.shape[0]
    for lead in range(d):
        for tail in itertools.product(range(fq.order), repeat=d - lead - 1):
            c = np.zeros(d, dtype=np.int64)
            c[lead] = 1
            c[lead + 1:] = tail
            yield fq(c) @ K


def _check_line_cap(M, spaces, cap_lines):
    cap = DEFAULT_CAP_LINES if cap_lines is None else cap_lines
    num_lines = sum(count_lines(M.fq.order, K.shape[0]) for (_, K) in spaces)
    if num_lines > cap:
        raise ResourceCapError(
            "%s: %d singular lines to spin, above the cap of %d" %
            (M.name, num_lines, cap))
    return num_lines


def proper_singular_spins(M, cap_lines=None, stop_at_first=False):
    """Spins of singular lines that are proper submodules.

    Raises:
        ResourceCapError: If there are more singular lines than the cap.
    """
    spaces = singular_weight_spaces(M)
    _check_line_cap(M, spaces, cap_lines)
    found = []
    for _, K in spaces:
        for v in iterate_lines(M.fq, K):
            B = spin(M, v)
            if B.shape[0] < M.dim:
                found.append(B)
                if stop_at_first:
                    return found
    return found


def is_simple(M, cap_lines=None):
    """Whether ``M`` has no nonzero proper submodule.

    Args:
        M (common.GModule): Module with nilpotent positive part.
        cap_lines (int, optional): Largest number of singular lines spun.

    Returns:
        bool: ``True`` iff every singular line spins to all of ``M``.
    """
    if M.dim == 0:
        return False
    return len(proper_singular_spins(M, cap_lines, stop_at_first=True)) == 0


def quotient(M, N, name=None):
    """``M / N`` for a submodule ``N`` given by a reduced echelon basis.

    The images of the basis vectors outside the pivot columns of ``N`` form
    the basis of the quotient, so weight vectors stay weight vectors.

    Returns:
        tuple[common.GModule, list[int]]: The quotient and the indices of
        the basis vectors of ``M`` kept.
    """
    pivots = sc.pivot_columns(N)
    keep = [c for c in range(M.dim) if c not in pivots]
    actions = {}
    for x in M.acting:
        X = M.action(x)
        reduced = sc.reduce_modulo(X[:, keep].T, N, pivots)
        actions[x] = reduced[:, keep].T
    Q = cm.GModule(M.shape, M.fq, actions, [M.grading[c] for c in keep],
                   M.pchar, name=name if name is not None else M.name)
    return Q, keep


def simple_head(V, generator=None, cap_lines=None):
    """Simple quotient of a module generated by a highest weight vector.

    Proper submodules spun from singular lines are summed and factored out
    until no singular line spins to a proper submodule.

    Args:
        V (common.GModule): Module generated by ``generator``.
        generator (int, optional): Index of the generating basis vector.

    Returns:
        common.GModule: The head.
    """
    M = V
    g = 0 if generator is None else generator
    for _ in range(V.dim + 1):
        found = proper_singular_spins(M, cap_lines)
        if len(found) == 0:
            return M.check()
        N = sc.echelon_basis(M.fq(np.concatenate(found, axis=0)))
        if N.shape[0] >= M.dim or g in sc.pivot_columns(N):
            raise ConstructionError("%s: the proper submodules sum to %d of %d"
                                    % (M.name, N.shape[0], M.dim))
        M, keep = quotient(M, N, name="L(%s)" % V.name)
        g = keep.index(g)
    raise ConstructionError("%s: head not found in %d rounds" %
                            (V.name, V.dim + 1))


def _basis_key(B):
    return tuple(int(x) for x in np.asarray(B).flatten()) + (B.shape[0],)


def submodule_lattice_bruteforce(M, cap_size=None):
    """All submodules of ``M``, including zero and ``M``.

    Every submodule is a sum of cyclic submodules, so the spins of all nonzero
    vectors are closed under sums.

    Raises:
        ResourceCapError: If ``q^dim`` exceeds the cap.

    Returns:
        list[galois.FieldArray]: Reduced echelon bases, by dimension and then
        lexicographically.
    """
    cap = DEFAULT_CAP_BRUTEFORCE if cap_size is None else cap_size
    if M.fq.order**M.dim > cap:
        raise ResourceCapError("%s: %d^%d vectors exceed the cap of %d" %
                               (M.name, M.fq.order, M.dim, cap))
    subs = {_basis_key(M.fq.zeros((0, M.dim))): M.fq.zeros((0, M.dim))}
    for c in itertools.product(range(M.fq.order), repeat=M.dim):
        if any(c):
            B = spin(M, np.array(c, dtype=np.int64))
            subs.setdefault(_basis_key(B), B)

    changed = True
    while changed:
        changed = False
        bases = list(subs.values())
        for B1 in bases:
            for B2 in bases:
                S = sc.echelon_basis(M.fq(np.concatenate([B1, B2], axis=0)))
                key = _basis_key(S)
                if key not in subs:
                    subs[key] = S
                    changed = True
    return sorted(subs.values(),
                  key=lambda B: (B.shape[0], _basis_key(B)))


def is_simple_bruteforce(M):
    return len(submodule_lattice_bruteforce(M)) == 2
