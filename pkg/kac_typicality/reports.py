"""Rendering of command results as JSON, CSV or text.

Every renderer is a pure function of the report dictionary, and JSON keys are
sorted, so equal reports give byte-identical files.
"""
import csv
import io
import json

import kac_typicality.utils as ut

FORMATS = ['json', 'csv', 'text']

SCAN_COLUMNS = [
    'dim_M0', 'dim_K', 'singular_dim_M0', 'typicality_value',
    'predicted_typical', 'oracle_simple', 'agree'
]
MORITA_COLUMNS = [
    'lambda_h_alpha', 'h_alpha_outside_prime_field', 'simple', 'dim_M',
    'dim_K', 'dim_invariants', 'invariants_g0_stable',
    'same_diagonal_character', 'ok'
]


def to_json_string(report):
    return json.dumps(report, indent=4, sort_keys=True) + "\n"


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def rows_to_csv(rows, columns, num_lambda_coords):
    """One line per row; the ``lambda`` entry is split into ``lambda_1``,
    ``lambda_2``, ... columns."""
    f = io.StringIO()
    writer = csv.writer(f, lineterminator="\n")
    header = ['lambda_%d' % (a + 1) for a in range(num_lambda_coords)]
    writer.writerow(header + columns)
    for r in rows:
        writer.writerow([_cell(x) for x in r['lambda']] +
                        [_cell(r[c]) for c in columns])
    return f.getvalue()


def _num_coords(report):
    return report['shape']['m'] + report['shape']['n']


def scan_to_csv(report):
    return rows_to_csv(report['rows'], SCAN_COLUMNS, _num_coords(report))


def morita_to_csv(report):
    return rows_to_csv(report['rows'], MORITA_COLUMNS, _num_coords(report))


def _shape_text(report):
    return "gl(%d,%d)" % (report['shape']['m'], report['shape']['n'])


def scan_to_text(report):
    lines = [
        "%s, p = %d: %d weights, %d simple, %d disagreements" %
        (_shape_text(report), report['p'], report['num_lambdas'],
         report['num_simple'], report['num_disagreements'])
    ]
    for r in report['rows']:
        if not r['agree']:
            lines.append("  disagreement at lambda = %s" % (r['lambda'],))
    return "\n".join(lines) + "\n"


def morita_to_text(report):
    f = report['field']
    lines = [
        "%s over GF(%d^%d), chi = %s: %d admissible weights, %d failures" %
        (_shape_text(report), f['p'], f['k'], report['chi']['values'],
         report['num_lambdas'], report['num_failures'])
    ]
    for r in report['rows']:
        lines.append(
            "  lambda = %s: simple = %s, dim invariants = %d, dim M = %d%s" %
            (r['lambda'], _cell(r['simple']), r['dim_invariants'], r['dim_M'],
             "" if r['ok'] else "  FAILED"))
    return "\n".join(lines) + "\n"


def _flat_cell(v):
    nested = isinstance(v, dict) or (isinstance(v, list) and any(
        isinstance(x, (dict, list)) for x in v))
    return json.dumps(v, sort_keys=True) if nested else _cell(v)


def flat_to_csv(report):
    """Two-column ``key,value`` rendering of a flat report; nested values
    are written as JSON."""
    f = io.StringIO()
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(['key', 'value'])
    for k in sorted(report):
        writer.writerow([k, _flat_cell(report[k])])
    return f.getvalue()


def flat_to_text(report):
    lines = []
    for k in sorted(report):
        lines.append("%s: %s" % (k, _flat_cell(report[k])))
    return "\n".join(lines) + "\n"


def render(report, fmt, kind=None):
    """Renders a report.

    Args:
        report (dict[str, object]): JSON serializable report.
        fmt (str): One of ``json``, ``csv`` and ``text``.
        kind (str, optional): ``scan`` or ``morita`` for table reports;
            anything else is rendered as a flat report.
    """
    assert fmt in FORMATS
    if fmt == 'json':
        return to_json_string(report)
    if kind == 'scan':
        return scan_to_csv(report) if fmt == 'csv' else scan_to_text(report)
    if kind == 'morita':
        return morita_to_csv(report) if fmt == 'csv' else morita_to_text(report)
    return flat_to_csv(report) if fmt == 'csv' else flat_to_text(report)


def write_output(text, out=None):
    if out is None:
        print(text, end='')
    else:
        ut.write_textfile(out, [text], with_newline=False)
