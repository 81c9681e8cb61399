"""mdsconv command line: build, analyze, parity, cyclic, sweep, repro.

Output is JSON on stdout (CSV for the tabular commands with ``--csv``).
Exit status 0 on success, 1 on a library error or a failed check, 2 on a
usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .analysis import analyze
from .codebuild import ConvCode, build_code
from .distance import DEFAULT_EDGE_BUDGET
from .errors import MdsConvError, ParseError
from .gf import GF, find_element_of_order
from .parity import build_H_full, build_H_general, build_H_min, verify_parity_pair
from .repro import run_repro
from .skewcyclic import (
    build_ring,
    cyclicity_decision,
    multiplication_automorphism,
    sigma_on_idempotents,
    unit_factorization,
)
from .sweep import DEFAULT_N_MAX, DEFAULT_Q_SET, POLICIES, row_dict, run_sweep


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write('\n')


def _emit_csv(rows: list[dict]) -> None:
    if not rows:
        return
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})


def _load_code(path: str) -> ConvCode:
    try:
        text = sys.stdin.read() if path == '-' else open(path).read()
        obj = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f'cannot read code: {exc}') from exc
    if not isinstance(obj, dict):
        raise ParseError('code record must be a JSON object')
    if 'code' in obj and isinstance(obj['code'], dict):
        obj = obj['code']
    return ConvCode.from_json(obj)


def cmd_build(args) -> int:
    F = GF(args.q, args.modulus)
    if args.alpha_order == 'n':
        alpha = find_element_of_order(F, args.n, 'exact')
    else:
        alpha = find_element_of_order(F, args.n, 'at_least')
    _emit(build_code(F, args.n, args.delta, alpha).to_json())
    return 0


def cmd_analyze(args) -> int:
    code = _load_code(args.code)
    report = analyze(code, max_l=args.max_l, row_distances=args.row_distances,
                     oracle=args.oracle, budget=args.budget)
    if args.csv:
        rows = [{'length': int(j), 'weight': int(w), 'count': c}
                for j, t in report.get('enumerator', {}).items() for w, c in t.items()]
        _emit_csv(rows)
    else:
        _emit(report)
    return 0


def cmd_parity(args) -> int:
    code = _load_code(args.code)
    F, n = code.field, code.n
    if args.kind == 'full':
        H = build_H_full(F, n, code.alpha)
    elif args.kind == 'min':
        H = build_H_min(F, n, code.alpha)
    else:
        H = build_H_general(F, n, code.delta, code.alpha, verify=False)
    report = verify_parity_pair(code.G, H).to_json()
    _emit({'kind': args.kind, 'H': H.to_json(), **report})
    return 0 if report['certified'] else 1


def cmd_cyclic(args) -> int:
    code = _load_code(args.code)
    report = cyclicity_decision(code, exhaustive=True if args.exhaustive else None)
    out = report.to_json()
    if code.alpha_order == code.n:
        ring = build_ring(code.field, code.n)
        sigma = multiplication_automorphism(ring, code.alpha)
        eps = ring.linear_idempotents(code.alpha)
        out['idempotent_permutation'] = sigma_on_idempotents(sigma, eps)
        u, u_inv = unit_factorization(ring, sigma, code.delta)
        out['unit'] = [list(map(list, map(code.field.rep_of, a.c))) for a in u.coeffs]
        out['unit_inverse'] = [list(map(list, map(code.field.rep_of, a.c))) for a in u_inv.coeffs]
    _emit(out)
    return 0


def cmd_sweep(args) -> int:
    rows = run_sweep(args.q, args.n_max, args.delta_policy, args.budget, args.jobs)
    dicts = [row_dict(r) for r in rows]
    skipped = [d for d in dicts if d['status'] == 'BudgetExceeded']
    if args.csv:
        _emit_csv(dicts)
    else:
        _emit({'rows': dicts, 'skipped': [[d['q'], d['n'], d['delta']] for d in skipped]})
    return 1 if any(r.failed for r in rows) else 0


def cmd_repro(args) -> int:
    result = run_repro(args.example)
    _emit(result)
    return 0 if result['passed'] else 1


def _modulus(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'modulus must be comma-separated integers, got {text!r}')


def _q_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'q list must be comma-separated integers, got {text!r}')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument('--json', action='store_true', help='JSON output (default)')
    fmt.add_argument('--csv', action='store_true', help='CSV output for tables')
    common.add_argument('--seed', type=int, default=None, help='accepted for compatibility; results are deterministic')
    common.add_argument('--budget', type=int, default=DEFAULT_EDGE_BUDGET, help='max state-graph edges')

    p = argparse.ArgumentParser(prog='mdsconv', description='MDS convolutional codes from Vandermonde generators')
    sub = p.add_subparsers(dest='command', required=True)

    b = sub.add_parser('build', parents=[common], help='construct a code')
    b.add_argument('--q', type=int, required=True)
    b.add_argument('--n', type=int, required=True)
    b.add_argument('--delta', type=int, required=True)
    b.add_argument('--alpha-order', choices=['n', 'min'], default='min',
                   help='n: element of order exactly n; min: first element of order >= n')
    b.add_argument('--modulus', type=_modulus, default=None, help='ascending coefficients, e.g. 1,1,0,1')
    b.set_defaults(func=cmd_build)

    a = sub.add_parser('analyze', parents=[common], help='distances and weight enumerator')
    a.add_argument('--code', required=True, help='code JSON file, or - for stdin')
    a.add_argument('--max-l', type=int, default=None)
    a.add_argument('--row-distances', type=int, default=None, metavar='J', help='extended row distances up to length J')
    a.add_argument('--oracle', action='store_true', help='also run the brute-force distance')
    a.set_defaults(func=cmd_analyze)

    h = sub.add_parser('parity', parents=[common], help='parity-check matrix and verification')
    h.add_argument('--code', required=True)
    h.add_argument('--kind', choices=['full', 'general', 'min'], default='general')
    h.set_defaults(func=cmd_parity)

    c = sub.add_parser('cyclic', parents=[common], help='skew-cyclicity decision')
    c.add_argument('--code', required=True)
    c.add_argument('--exhaustive', action='store_true', help='search all automorphisms regardless of size')
    c.set_defaults(func=cmd_cyclic)

    s = sub.add_parser('sweep', parents=[common], help='free distance over a parameter grid')
    s.add_argument('--q', type=_q_list, default=list(DEFAULT_Q_SET), help='comma-separated field sizes')
    s.add_argument('--n-max', type=int, default=DEFAULT_N_MAX)
    s.add_argument('--delta-policy', choices=POLICIES, default='mds')
    s.add_argument('--jobs', type=int, default=1)
    s.set_defaults(func=cmd_sweep)

    r = sub.add_parser('repro', parents=[common], help='recompute the reference examples')
    r.add_argument('example', type=int, choices=[1, 2, 3, 4])
    r.set_defaults(func=cmd_repro)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MdsConvError as exc:
        _emit({'error': exc.code, 'message': str(exc)})
        return 1


if __name__ == '__main__':
    sys.exit(main())
