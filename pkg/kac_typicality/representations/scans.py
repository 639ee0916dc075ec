import itertools
import sys

import numpy as np

import kac_typicality.rootdata as rd
import kac_typicality.scalars as sc
import kac_typicality.superpbw as pbw
import kac_typicality.multiworking as mw
import kac_typicality.representations.common as cm
import kac_typicality.representations.induction as ind
import kac_typicality.representations.simplicity as sim
from kac_typicality.errors import PreconditionError, ResourceCapError


def restricted_lambdas(shape, fq):
    """All weights with coordinates in the prime field, lexicographically."""
    return [
        cm.ModLambda(shape, fq, c)
        for c in itertools.product(range(fq.p), repeat=shape.size)
    ]


def build_kac_module(lam, pchar, cap_lines=None):
    """Returns ``(M0, K)`` with ``M0`` the simple head of the baby Verma
    module of weight ``lam`` and ``K`` the Kac module induced from it."""
    V = ind.baby_verma_g0(lam, pchar)
    M0 = sim.simple_head(V, 0, cap_lines)
    K = ind.induce_kac(M0, pchar)
    return M0, K


def scan_case(m, n, p, coords, cap_lines=None):
    """One row of the restricted simplicity scan.

    Takes plain integers so that it can be shipped to worker processes.
    """
    shape = rd.Shape(m, n)
    fq = sc.fq_make(p, 1)
    lam = cm.ModLambda(shape, fq, coords)
    M0, K = build_kac_module(lam, cm.PChar.zero(shape, fq), cap_lines)
    value = int(rd.typicality_poly(shape).evaluate_mod(lam.as_array(), fq))
    predicted = value != 0
    simple = sim.is_simple(K, cap_lines)
    return {
        'lambda': list(coords),
        'dim_M0': M0.dim,
        'dim_K': K.dim,
        'singular_dim_M0': int(sim.singular_space(M0).shape[0]),
        'typicality_value': value,
        'predicted_typical': predicted,
        'oracle_simple': simple,
        'agree': predicted == simple
    }


def scan_simplicity(shape, p, cap_lines=None, num_workers=1, verbose=False):
    """Compares simplicity of ``K(lambda)`` with the typicality polynomial
    for every restricted ``lambda``.

    Returns:
        dict[str, object]: Rows sorted by ``lambda`` and the counts of
        weights, simple modules and disagreements.
    """
    fq = sc.fq_make(p, 1)
    args_lst = [(shape.m, shape.n, p, lam.coords, cap_lines)
                for lam in restricted_lambdas(shape, fq)]
    rows = mw.run_tasks(scan_case, args_lst, num_workers, verbose=verbose)
    rows = sorted(rows, key=lambda r: r['lambda'])
    return {
        'shape': shape.to_json(),
        'p': p,
        'rows': rows,
        'num_lambdas': len(rows),
        'num_simple': sum(1 for r in rows if r['oracle_simple']),
        'num_disagreements': sum(1 for r in rows if not r['agree'])
    }


def admissible_lambdas(pchar):
    """Weights with ``lambda_a^p - lambda_a = chi(e_aa)^p`` for every ``a``,
    lexicographically."""
    fq = pchar.fq
    roots = []
    for a in pchar.shape.indices():
        c = pchar.value((a, a))**fq.p
        roots.append(sorted(int(x) for x in sc.artin_schreier_solve(fq, c)))
    return [cm.ModLambda(pchar.shape, fq, c) for c in itertools.product(*roots)]


def smallest_admissible_field(shape, p, chi_ints, kmax=None):
    """Smallest ``GF(p^k)``, ``k <= kmax``, with an admissible weight.

    Args:
        chi_ints (list[int]): Diagonal values of ``chi`` in the prime field.
        kmax (int, optional): Defaults to ``p``, which always suffices.

    Returns:
        tuple[scalars.FqField, common.PChar]: The field and ``chi`` over it.
    """
    kmax = p if kmax is None else kmax
    for k in range(1, kmax + 1):
        fq = sc.fq_make(p, k)
        pchar = cm.PChar.from_ints(shape, fq, chi_ints)
        if len(admissible_lambdas(pchar)) > 0:
            return fq, pchar
    raise ResourceCapError("no admissible weight over GF(%d^k) for k <= %d" %
                           (p, kmax))


def check_morita_hypothesis(pchar):
    for pair in rd.sorted_odd_pairs(pchar.shape):
        if pchar.h_alpha_value(pair.i, pair.j) == 0:
            raise PreconditionError(
                "chi(h_alpha) = 0 for the odd pair %s; the check needs "
                "chi(h_alpha) != 0 for every odd positive root" % (pair,))


def morita_case(lam, pchar, cap_lines=None):
    shape, fq = lam.shape, lam.fq
    outside = all(not fq.is_in_prime_subfield(lam.h_alpha_value(q.i, q.j))
                  for q in rd.sorted_odd_pairs(shape))
    M, K = build_kac_module(lam, pchar, cap_lines)
    simple = sim.is_simple(K, cap_lines)

    inv = sc.echelon_basis(sim.invariants_g1(K))
    stable = True
    for x in cm.even_matrix_units(shape):
        images = inv @ K.action(x).T
        if np.any(sc.reduce_modulo(images, inv) != 0):
            stable = False
    same_character = False
    if stable and inv.shape[0] == M.dim:
        same_character = all(
            cm.restrict_to_subspace(K.action((a, a)), inv).characteristic_poly()
            == M.action((a, a)).characteristic_poly()
            for a in shape.indices())
    row = {
        'lambda': lam.to_json(),
        'lambda_h_alpha': [int(lam.h_alpha_value(q.i, q.j))
                           for q in rd.sorted_odd_pairs(shape)],
        'h_alpha_outside_prime_field': outside,
        'simple': simple,
        'dim_M': M.dim,
        'dim_K': K.dim,
        'dim_invariants': int(inv.shape[0]),
        'invariants_g0_stable': stable,
        'same_diagonal_character': same_character
    }
    row['ok'] = (outside and simple and stable and same_character and
                 row['dim_invariants'] == M.dim)
    return row


def verify_theorem53_consequences(shape, p, chi_ints, k=None, kmax=None,
                                  cap_lines=None, verbose=False):
    """Checks, for each admissible weight of a p-character ``chi`` with
    ``chi(h_alpha) != 0`` on every odd root, that ``lambda(h_alpha)`` lies
    outside the prime field, that the Kac module is simple, and that its
    ``g1``-invariants are a ``g0``-stable copy of ``M(lambda)``.

    Args:
        chi_ints (list[int]): Diagonal values of ``chi`` in the prime field.
        k (int, optional): Degree of the field; by default the smallest one
            admitting a weight is searched for up to ``kmax``.

    Raises:
        PreconditionError: If the hypothesis on ``chi`` fails, or if no weight
            is admissible over the chosen field.
    """
    fq0 = sc.fq_make(p, 1)
    check_morita_hypothesis(cm.PChar.from_ints(shape, fq0, chi_ints))
    if k is None:
        fq, pchar = smallest_admissible_field(shape, p, chi_ints, kmax)
    else:
        fq = sc.fq_make(p, k)
        pchar = cm.PChar.from_ints(shape, fq, chi_ints)

    lams = admissible_lambdas(pchar)
    if len(lams) == 0:
        raise PreconditionError("no admissible weight for chi = %s over %s" %
                                (list(chi_ints), fq))
    rows = []
    for lam in lams:
        rows.append(morita_case(lam, pchar, cap_lines))
        if verbose:
            print("lambda = %s: %s" % (lam.to_json(),
                                       "ok" if rows[-1]["ok"] else "FAILED"),
                  file=sys.stderr)
    return {
        'shape': shape.to_json(),
        'field': fq.to_json(),
        'chi': pchar.to_json(),
        'rows': rows,
        'num_lambdas': len(rows),
        'num_failures': sum(1 for r in rows if not r['ok'])
    }


def top_invariants_check(shape, p):
    """Checks that the ``g1``-invariants of ``u(g1)`` are the line through
    ``e_I``, ``I`` all odd pairs, and that the ``e_I`` are independent."""
    fq = sc.fq_make(p, 1)
    U = ind.u_g1_regular_module(shape, fq)
    inv = sim.invariants_g1(U)
    unit = fq.zeros(U.dim)
    unit[0] = 1

    pairs = rd.sorted_odd_pairs(shape)
    vectors = []
    for r in range(len(pairs) + 1):
        for I in itertools.combinations(pairs, r):
            w = pbw.make_eI(shape, I)
            vectors.append(U.word_matrix(w.factors) @ unit)
    E = fq(np.stack(vectors, axis=0))
    e_top = U.word_matrix(pbw.make_eI(shape, pairs).factors) @ unit
    spanned = (inv.shape[0] == 1 and
               sc.in_span(sc.echelon_basis(inv), e_top) and
               bool(np.any(e_top != 0)))
    report = {
        'shape': shape.to_json(),
        'p': p,
        'dim': U.dim,
        'dim_invariants': int(inv.shape[0]),
        'spanned_by_e_top': spanned,
        'basis_rank': sc.rank(E)
    }
    report['ok'] = (report['dim_invariants'] == 1 and spanned and
                    report['basis_rank'] == 2**(shape.m * shape.n))
    return report


def random_word(shape, rng, max_length):
    units = cm.all_matrix_units(shape)
    length = rng.randint(1, max_length + 1)
    idx = rng.randint(0, len(units), size=length)
    return pbw.SuperWord(shape, [units[i] for i in idx])


def cross_check_words(shape, p, num_words=50, max_length=5, num_lambdas=5,
                      seed=0, cap_lines=None):
    """Compares the action of random words on Kac modules with the action of
    their straightened forms."""
    fq = sc.fq_make(p, 1)
    rng = np.random.RandomState(seed)
    words = [random_word(shape, rng, max_length) for _ in range(num_words)]
    lambdas = [
        cm.ModLambda(shape, fq, rng.randint(0, p, size=shape.size))
        for _ in range(num_lambdas)
    ]
    st = pbw.Straightener(shape)
    normal_forms = [pbw.straighten(w, st) for w in words]

    mismatches = []
    for lam in lambdas:
        _, K = build_kac_module(lam, cm.PChar.zero(shape, fq), cap_lines)
        for w, x in zip(words, normal_forms):
            if np.any(K.element_matrix(w) != K.element_matrix(x)):
                mismatches.append({'lambda': lam.to_json(), 'word': w.to_text()})
    return {
        'shape': shape.to_json(),
        'p': p,
        'seed': seed,
        'num_words': len(words),
        'num_lambdas': len(lambdas),
        'lambdas': [lam.to_json() for lam in lambdas],
        'mismatches': mismatches,
        'ok': len(mismatches) == 0
    }
