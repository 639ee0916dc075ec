"""Command-line entry point: ``kac-verify <command> [flags]``.

Exit codes are 0 on success, 1 when a check disagrees, 2 when a resource cap
is hit and 3 when the input violates a precondition.
"""
import sys

import kac_typicality.utils as ut
import kac_typicality.scalars as sc
import kac_typicality.rootdata as rd
import kac_typicality.superpbw as pbw
import kac_typicality.reports as rp
import kac_typicality.verification_logging as vl
import kac_typicality.representations.scans as scans
from kac_typicality.errors import PreconditionError, ResourceCapError

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_RESOURCE_CAP = 2
EXIT_PRECONDITION = 3

ENV_PREFIX = 'KAC_'


def parse_int_list(text, argname):
    try:
        return [int(s) for s in text.split(',')]
    except ValueError:
        raise PreconditionError("malformed --%s %r: expected comma-separated "
                                "integers" % (argname, text))


class RunConfig:
    """Validated flags of one command invocation.

    Args:
        args (dict[str, object]): Parsed flags, as returned by
            ``utils.CommandLineArgs.parse``.
    """

    def __init__(self, args):
        self.command = args['command']
        self.m = args.get('m')
        self.n = args.get('n')
        self.p = args.get('p')
        self.k = args.get('k')
        self.kmax = args.get('kmax')
        self.chi_text = args.get('chi')
        self.lambda_text = args.get('lambda')
        self.word = args.get('word')
        self.cap_terms = args.get('cap_terms')
        self.cap_lines = args.get('cap_lines')
        self.seed = args.get('seed')
        self.num_workers = args.get('num_workers')
        self.num_words = args.get('num_words')
        self.max_length = args.get('max_length')
        self.num_lambdas = args.get('num_lambdas')
        self.config_filepath = args.get('config_filepath')
        self.config_name = args.get('config_name')
        self.format = args.get('format', 'text')
        self.out = args.get('out')
        self.log_folderpath = args.get('log_folderpath')
        self.run_name = args.get('run_name')
        if self.run_name is None:
            self.run_name = self.command
        self.quiet = bool(args.get('quiet', False))
        self.shape = None
        self.chi = None

    def validate(self):
        """Rejects invalid combinations before anything is computed.

        Raises:
            PreconditionError: On the first invalid flag.
        """
        if self.format not in rp.FORMATS:
            raise PreconditionError("unknown format %r" % (self.format,))
        if self.m is not None or self.n is not None:
            self.shape = rd.Shape(self.m, self.n)
        if self.p is not None:
            sc.fq_make(self.p, 1)
        for name in ['k', 'kmax', 'cap_lines', 'num_workers', 'num_words',
                     'max_length', 'num_lambdas']:
            v = getattr(self, name)
            if v is not None and v < 1:
                raise PreconditionError("--%s must be positive, got %d" %
                                        (name.replace('_', '-'), v))
        if self.cap_terms is not None and self.cap_terms < 0:
            raise PreconditionError("--cap-terms must be nonnegative")
        if self.chi_text is not None:
            self.chi = parse_int_list(self.chi_text, 'chi')
            if len(self.chi) != self.shape.size:
                raise PreconditionError(
                    "--chi needs %d values for %s, got %d" %
                    (self.shape.size, self.shape, len(self.chi)))
        if self.command == 'straighten' and not self.word:
            raise PreconditionError("straighten needs a nonempty --word")
        return self

    def to_json(self):
        d = {
            'command': self.command,
            'format': self.format,
        }
        for name in [
                'm', 'n', 'p', 'k', 'kmax', 'chi', 'cap_terms', 'cap_lines',
                'seed', 'num_words', 'max_length', 'num_lambdas', 'word',
                'config_name'
        ]:
            v = getattr(self, name)
            if v is not None:
                d[name] = v
        if self.lambda_text is not None:
            d['lambda'] = self.lambda_text
        return d


def progress(cfg, msg):
    if not cfg.quiet:
        print(msg, file=sys.stderr)


class Outcome:
    """What a command hands back to ``main``.

    Args:
        report (dict[str, object]): JSON serializable report.
        ok (bool): Whether every check passed.
        kind (str, optional): Table kind for the renderers.
        cases (list[tuple[dict, dict]], optional): ``(config, results)``
            pairs written as cases when logging is enabled.
        text (str, optional): Text rendering that replaces the generic one.
    """

    def __init__(self, report, ok, kind=None, cases=None, text=None):
        self.report = report
        self.ok = ok
        self.kind = kind
        self.cases = cases if cases is not None else [(None, report)]
        self.text = text


def cmd_typicality(cfg):
    tp = rd.typicality_poly(cfg.shape)
    report = {'shape': cfg.shape.to_json(), 'polynomial': tp.to_json()}
    text = tp.to_text()
    if cfg.lambda_text is not None:
        lam = rd.parse_weight(cfg.shape, cfg.lambda_text)
        value = tp.evaluate(lam)
        report['lambda'] = lam.to_json()
        report['value'] = sc.rational_to_string(value)
        text = str(value)
    return Outcome(report, True, text=text + "\n")


def cmd_verify_theorem(cfg):
    tp = rd.typicality_poly(cfg.shape)
    f_h, match = pbw.verify_theorem(cfg.shape, cfg.cap_terms)
    report = {
        'shape': cfg.shape.to_json(),
        'f_h': str(f_h.as_expr()),
        'typicality': tp.to_text(),
        'typicality_expanded': str(tp.as_poly().as_expr()),
        'match': match
    }
    text = "f(h)(lambda) = %s\nf_%d,%d(lambda) = %s\nmatch: %s\n" % (
        report['f_h'], cfg.shape.m, cfg.shape.n, report['typicality'],
        "true" if match else "false")
    return Outcome(report, match, text=text)


def cmd_verify_lemma(cfg):
    shape = cfg.shape
    st = pbw.Straightener(shape)
    rows = []
    for i in range(1, shape.m + 1):
        rows.append({'i': i, 'holds': pbw.verify_lemma41(shape, i, st)})
    report = {
        'shape': shape.to_json(),
        'rows': rows,
        'ok': all(r['holds'] for r in rows)
    }
    return Outcome(report, report['ok'])


def cmd_straighten(cfg):
    w = pbw.parse_word(cfg.word, cfg.shape)
    x = pbw.straighten(w)
    report = {
        'shape': cfg.shape.to_json(),
        'word': w.to_text(),
        'normal_form': x.to_json()
    }
    return Outcome(report, True, text=x.to_text() + "\n")


def cmd_scan(cfg):
    report = scans.scan_simplicity(cfg.shape,
                                   cfg.p,
                                   cap_lines=cfg.cap_lines,
                                   num_workers=cfg.num_workers,
                                   verbose=not cfg.quiet)
    cases = [({'lambda': r['lambda'], 'p': cfg.p}, r) for r in report['rows']]
    return Outcome(report, report['num_disagreements'] == 0, 'scan', cases)


def cmd_morita_check(cfg):
    if cfg.chi is None:
        raise PreconditionError("morita-check needs --chi")
    report = scans.verify_theorem53_consequences(cfg.shape,
                                                 cfg.p,
                                                 cfg.chi,
                                                 k=cfg.k,
                                                 kmax=cfg.kmax,
                                                 cap_lines=cfg.cap_lines,
                                                 verbose=not cfg.quiet)
    cases = [({'lambda': r['lambda'], 'field': report['field']}, r)
             for r in report['rows']]
    return Outcome(report, report['num_failures'] == 0, 'morita', cases)


def cmd_top_invariants(cfg):
    report = scans.top_invariants_check(cfg.shape, cfg.p)
    return Outcome(report, report['ok'])


def cmd_cross_check(cfg):
    report = scans.cross_check_words(cfg.shape,
                                     cfg.p,
                                     num_words=cfg.num_words,
                                     max_length=cfg.max_length,
                                     num_lambdas=cfg.num_lambdas,
                                     seed=cfg.seed,
                                     cap_lines=cfg.cap_lines)
    return Outcome(report, report['ok'])


def _theorem_criterion(shapes, cap_terms):
    rows = []
    for (m, n) in shapes:
        _, match = pbw.verify_theorem(rd.Shape(m, n), cap_terms)
        rows.append({'shape': [m, n], 'match': match})
    return {'rows': rows, 'ok': all(r['match'] for r in rows)}


def _annihilation_criterion(shapes):
    rows = []
    for (m, n) in shapes:
        shape = rd.Shape(m, n)
        st = pbw.Straightener(shape)
        holds = [pbw.verify_lemma41(shape, i, st) for i in range(1, m + 1)]
        rows.append({'shape': [m, n], 'holds': all(holds)})
    return {'rows': rows, 'ok': all(r['holds'] for r in rows)}


def _scan_criterion(cases, cap_lines, num_workers, verbose):
    rows = []
    for case in cases:
        r = scans.scan_simplicity(rd.Shape(case['m'], case['n']), case['p'],
                                  cap_lines, num_workers, verbose)
        row = {
            'shape': [case['m'], case['n']],
            'p': case['p'],
            'num_lambdas': r['num_lambdas'],
            'num_simple': r['num_simple'],
            'num_disagreements': r['num_disagreements']
        }
        row['ok'] = r['num_disagreements'] == 0
        if 'num_simple' in case:
            row['ok'] = row['ok'] and r['num_simple'] == case['num_simple']
        rows.append(row)
    return {'rows': rows, 'ok': all(r['ok'] for r in rows)}


def _top_invariants_criterion(max_mn, p):
    rows = []
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn // m + 1):
            r = scans.top_invariants_check(rd.Shape(m, n), p)
            rows.append({'shape': [m, n], 'ok': r['ok']})
    return {'p': p, 'rows': rows, 'ok': all(r['ok'] for r in rows)}


def _morita_criterion(cases, cap_lines):
    rows = []
    for case in cases:
        r = scans.verify_theorem53_consequences(rd.Shape(case['m'],
                                                         case['n']),
                                                case['p'],
                                                case['chi'],
                                                kmax=case.get('kmax'),
                                                cap_lines=cap_lines)
        rows.append({
            'shape': [case['m'], case['n']],
            'chi': case['chi'],
            'field': r['field'],
            'num_lambdas': r['num_lambdas'],
            'num_failures': r['num_failures'],
            'ok': r['num_failures'] == 0 and r['num_lambdas'] > 0
        })
    return {'rows': rows, 'ok': all(r['ok'] for r in rows)}


def cmd_acceptance(cfg):
    """Runs the criteria listed in a named configuration of a JSON file.

    Recognized keys are ``theorem_shapes``, ``rootdata_max_size``,
    ``scan_cases``, ``top_invariants_max_mn`` (with ``top_invariants_p``),
    ``morita_cases`` and ``cross_check``; missing keys skip the criterion.
    """
    if cfg.config_filepath is None or not ut.file_exists(cfg.config_filepath):
        raise PreconditionError("config file %r not found" %
                                (cfg.config_filepath,))
    configs = ut.get_config(cfg.config_filepath)
    if cfg.config_name not in configs:
        raise PreconditionError("unknown config %r in %s; known: %s" %
                                (cfg.config_name, cfg.config_filepath,
                                 ", ".join(sorted(configs))))
    config = configs[cfg.config_name]
    verbose = not cfg.quiet
    criteria = {}
    if 'theorem_shapes' in config:
        progress(cfg, "Checking the typicality identity.")
        criteria['theorem'] = _theorem_criterion(config['theorem_shapes'],
                                                 cfg.cap_terms)
        progress(cfg, "Checking the highest weight annihilation lemma.")
        criteria['annihilation'] = _annihilation_criterion(
            config['theorem_shapes'])
    if 'rootdata_max_size' in config:
        progress(cfg, "Checking root datum identities.")
        criteria['rootdata'] = rd.verify_identities(config['rootdata_max_size'])
    if 'scan_cases' in config:
        progress(cfg, "Scanning restricted Kac modules.")
        criteria['scan'] = _scan_criterion(config['scan_cases'], cfg.cap_lines,
                                           cfg.num_workers, verbose)
    if 'top_invariants_max_mn' in config:
        progress(cfg, "Checking invariants of u(g1).")
        criteria['top_invariants'] = _top_invariants_criterion(
            config['top_invariants_max_mn'], config.get('top_invariants_p', 3))
    if 'morita_cases' in config:
        progress(cfg, "Checking Kac modules with nonrestricted characters.")
        criteria['morita'] = _morita_criterion(config['morita_cases'],
                                               cfg.cap_lines)
    if 'cross_check' in config:
        progress(cfg, "Cross-checking straightening against matrices.")
        cc = config['cross_check']
        criteria['cross_check'] = scans.cross_check_words(
            rd.Shape(cc['m'], cc['n']),
            cc['p'],
            num_words=cc.get('num_words', 50),
            max_length=cc.get('max_length', 5),
            num_lambdas=cc.get('num_lambdas', 5),
            seed=cfg.seed,
            cap_lines=cfg.cap_lines)

    report = {
        'config_name': cfg.config_name,
        'seed': cfg.seed,
        'criteria': criteria,
        'ok': all(c['ok'] for c in criteria.values())
    }
    cases = [({'criterion': name}, criteria[name]) for name in sorted(criteria)]
    return Outcome(report, report['ok'], cases=cases)


COMMANDS = {
    'typicality': cmd_typicality,
    'verify-theorem': cmd_verify_theorem,
    'verify-lemma': cmd_verify_lemma,
    'straighten': cmd_straighten,
    'scan': cmd_scan,
    'morita-check': cmd_morita_check,
    'top-invariants': cmd_top_invariants,
    'cross-check': cmd_cross_check,
    'acceptance': cmd_acceptance,
}


def _add_output_flags(cl):
    cl.add('format', 'str', 'text', True, 'Output format.', rp.FORMATS)
    cl.add('out', 'str', None, True, 'Write the report to this file.')
    cl.add('log-folderpath', 'str', None, True,
           'Folder for per-case JSON logs.')
    cl.add('run-name', 'str', None, True,
           'Name of the log run folder; defaults to the command name.')
    cl.add('quiet', 'flag', False, True, 'Do not print progress.')


def _add_shape_flags(cl):
    cl.add('m', 'int', None, False, 'Number of even indices.')
    cl.add('n', 'int', None, False, 'Number of odd indices.')


def get_command_line_args():
    cl = ut.CommandLineArgs(env_prefix=ENV_PREFIX,
                            description="Exact checks of the typicality "
                            "criterion for Kac modules of gl(m,n).")

    sub = cl.add_subcommand('typicality', 'Print the typicality polynomial.')
    _add_shape_flags(sub)
    sub.add('lambda', 'str', None, True,
            'Weight to evaluate at, e.g. 1,-1/2,0.')
    _add_output_flags(sub)

    sub = cl.add_subcommand('verify-theorem',
                            'Straighten e_I f_I and compare with the '
                            'typicality polynomial.')
    _add_shape_flags(sub)
    sub.add('cap-terms', 'int', pbw.DEFAULT_CAP_TERMS, True,
            'Largest m*n accepted.')
    _add_output_flags(sub)

    sub = cl.add_subcommand('verify-lemma',
                            'Check the annihilation of the highest weight '
                            'vector by e_{i,m+n} f_J.')
    _add_shape_flags(sub)
    _add_output_flags(sub)

    sub = cl.add_subcommand('straighten', 'Print the PBW normal form of a word.')
    _add_shape_flags(sub)
    sub.add('word', 'str', None, False, 'Word such as "e 1 2 * f 1 2".')
    _add_output_flags(sub)

    for name, help in [('scan', 'Compare simplicity of restricted Kac modules '
                        'with the typicality polynomial.'),
                       ('morita-check', 'Check simplicity and invariants of '
                        'Kac modules for a nonrestricted character.'),
                       ('top-invariants', 'Check the g1-invariants of u(g1).'),
                       ('cross-check', 'Compare words with their normal '
                        'forms on Kac modules.')]:
        sub = cl.add_subcommand(name, help)
        _add_shape_flags(sub)
        sub.add('p', 'int', None, False, 'Odd prime.')
        if name in ['scan', 'morita-check', 'cross-check']:
            sub.add('cap-lines', 'int', None, True,
                    'Largest number of singular lines spun per module.')
        if name == 'scan':
            sub.add('num-workers', 'int', 1, True, 'Worker processes.')
        if name == 'morita-check':
            sub.add('chi', 'str', None, False,
                    'Diagonal values of chi, e.g. 1,0.')
            sub.add('k', 'int', None, True, 'Degree of the field extension.')
            sub.add('kmax', 'int', None, True,
                    'Largest degree searched; defaults to p.')
        if name == 'cross-check':
            sub.add('seed', 'int', 0, True, 'Random seed.')
            sub.add('num-words', 'int', 50, True, 'Number of random words.')
            sub.add('max-length', 'int', 5, True, 'Longest word.')
            sub.add('num-lambdas', 'int', 5, True, 'Number of weights.')
        _add_output_flags(sub)

    sub = cl.add_subcommand('acceptance', 'Run a configured set of checks.')
    sub.add('config_filepath', 'str', None, False, 'JSON file of configs.')
    sub.add('config_name', 'str', None, False, 'Name of the config to run.')
    sub.add('seed', 'int', 0, True, 'Random seed.')
    sub.add('cap-terms', 'int', pbw.DEFAULT_CAP_TERMS, True,
            'Largest m*n accepted.')
    sub.add('cap-lines', 'int', None, True,
            'Largest number of singular lines spun per module.')
    sub.add('num-workers', 'int', 1, True, 'Worker processes.')
    _add_output_flags(sub)
    return cl


def log_outcome(cfg, outcome):
    logger = vl.RunLogger(cfg.log_folderpath, cfg.run_name)
    for case_id, (config, results) in enumerate(outcome.cases):
        case_config = cfg.to_json()
        if config is not None:
            case_config.update(config)
        logger.log_case(case_id, case_config, results)
    logger.log_summary({
        'config': cfg.to_json(),
        'num_cases': len(outcome.cases),
        'ok': outcome.ok
    })


def run(cfg):
    """Runs a validated command and writes its report.

    Returns:
        int: ``EXIT_OK`` or ``EXIT_DISAGREEMENT``.
    """
    outcome = COMMANDS[cfg.command](cfg)
    if cfg.format == 'text' and outcome.text is not None:
        text = outcome.text
    else:
        text = rp.render(outcome.report, cfg.format, outcome.kind)
    rp.write_output(text, cfg.out)
    if cfg.log_folderpath is not None:
        log_outcome(cfg, outcome)
    return EXIT_OK if outcome.ok else EXIT_DISAGREEMENT


def main(argv=None):
    try:
        args = get_command_line_args().parse(argv)
    except SystemExit as e:
        # usage errors are precondition violations; --help exits cleanly.
        return EXIT_OK if e.code in (0, None) else EXIT_PRECONDITION
    try:
        cfg = RunConfig(args).validate()
        return run(cfg)
    except PreconditionError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceCapError as e:
        print("resource cap: %s" % e, file=sys.stderr)
        return EXIT_RESOURCE_CAP


if __name__ == '__main__':
    sys.exit(main())
