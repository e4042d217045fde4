"""``qlab`` command line: build a braiding, run a verification suite, write a report."""

import argparse
import json
import os
import sys
import time
from math import comb

from . import __version__
from .braidings import (BraidingError, bc_data, build_symmetry, certify_symmetry, composition_invariance_defects,
                        end_braiding, end_braiding_checks, extend_to_dual, extension_class_checks,
                        invariance_defects)
from .exact import ONE, ZERO, ScalarSyntaxError, q
from .mrea import (DEFAULT_DEGREE_CAP, bialgebra_maps, check_representation, covector_rep, degree_cap,
                   eq_form_equivalent, filtered_dimension, relation_set, restrict_rep, tensor_rep, vector_rep)
from .qlie import (adjoint_rep, bracket_identity_in_rep, bracket_tensor, classical_gl, involutive_axioms_check,
                   verify_bracket_axioms)
from .schur_weyl import MAX_DEGREE, decompose, isotypic_central, q_projectors, young_projectors
from .sl_reduction import (SlUnavailable, ell_center_check, restricted_bracket_jacobi, sl_adjoint_rep, sl_present,
                           sl_reduce_rep, z_twist)

SUITES = ('certify', 'decompose', 'mrea', 'bracket', 'sl', 'pbw', 'all')

ANCHORS = {
    'ybe': 'braided vector space: YBE',
    'class': 'involutive / Hecke symmetry',
    'skew': 'skew-invertibility',
    'bmat': '(B-mat)',
    'trbr': '(tr-BR)',
    'cb': 'C B = q^(-2a) I',
    'dual': 'extension to V + V*',
    'end': 'braiding R_End(V)',
    'comp': 'composition invariance',
    'young': 'Hecke Young projectors',
    'sw': 'Schur-Weyl decomposition',
    'mrea': '(mREA)',
    'eqform': '(eq-form)',
    'rep': 'equivariant representations',
    'delta': 'braided coproduct',
    'qform': '(Q-form)',
    'qskew': '(q-skew)',
    'qjac': '(q-Jac)',
    'last': '(last)',
    'ad': '(ad)',
    'classical': 'classical limit q = 1',
    'gen-lie': 'generalized Lie algebra axioms',
    'sl-quo': '(sl-quo)',
    'shift': '(shift)',
    'sl-rea': '(sl-rea)',
    'sl-ad': '(sl-ad)',
    'z-twist': 'z-twisted representations',
    'sl-red': '(sl-red)',
    'pbw': 'PBW flatness',
}


class SpecError(ValueError):
    pass


class Aborted(Exception):
    pass


def parse_spec(text):
    """A braiding spec from a file path or inline JSON; returns ``(spec dict, Braiding)``."""
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError('parse error at line %d column %d: %s' % (exc.lineno, exc.colno, exc.msg))
    if not isinstance(spec, dict):
        raise SpecError('parse error at line 1 column 1: spec must be a JSON object')
    try:
        return spec, build_symmetry(spec)
    except ScalarSyntaxError as exc:
        raise SpecError('parse error in scalar entry: %s' % exc)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, BraidingError):
            raise
        raise SpecError('invalid spec: %s' % exc)


def _plain(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


class Runner:

    def __init__(self, timing=False):
        self.entries = []
        self.timing = timing
        self._clock = time.perf_counter()

    def check(self, name, anchor, fn):
        """``fn()`` returns ok or (ok, witness) or (ok, witness, data)."""
        out = fn()
        if not isinstance(out, tuple):
            out = (out,)
        ok, witness, data = (tuple(out) + (None, None))[:3]
        entry = {'name': name, 'anchor': ANCHORS[anchor], 'pass': bool(ok),
                 'witness': None if ok else _plain(witness)}
        if data is not None:
            entry['data'] = _plain(data)
        if self.timing:
            # includes construction work done since the previous entry
            now = time.perf_counter()
            entry['time'] = round(now - self._clock, 3)
            self._clock = now
        self.entries.append(entry)
        return ok

    def report(self, prefix, anchor, report):
        for ename, ok, witness in report.entries:
            self.check('%s: %s' % (prefix, ename), anchor, lambda ok=ok, w=witness: (ok, w))
        return report.passed


class Context:
    """Lazily built objects shared by the suites."""

    def __init__(self, r, k, d):
        self.r = r
        self.k = k
        self.d = d
        self._cache = {}

    def get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def skew(self):
        return self.get('skew', lambda: bc_data(self.r))

    @property
    def ext(self):
        return self.get('ext', lambda: extend_to_dual(self.r, self.skew))

    @property
    def end(self):
        return self.get('end', lambda: end_braiding(self.ext))

    @property
    def rels(self):
        return self.get('rels', lambda: relation_set(self.r))

    @property
    def qp(self):
        return self.get('qp', lambda: q_projectors(self.ext))

    @property
    def bd(self):
        return self.get('bd', lambda: bracket_tensor(self.r, self.qp))

    @property
    def v(self):
        return self.get('v', lambda: vector_rep(self.r, self.skew))

    @property
    def vd(self):
        return self.get('vd', lambda: covector_rep(self.r, self.skew))


def suite_certify(run, ctx):
    cert = certify_symmetry(ctx.r)
    run.check('Yang-Baxter equation', 'ybe', lambda: (cert.ybe, cert.witnesses.get('ybe')))
    run.check('class polynomial', 'class', lambda: (cert.cls is not None, cert.witnesses.get('class'), cert.cls))
    run.check('skew-inverse exists', 'skew', lambda: (bool(cert.skew_invertible), cert.witnesses.get('skew_inverse')))
    names = {'skew_inverse_first': ('skew-inverse identity, first form', 'skew'),
             'skew_inverse_second': ('skew-inverse identity, second form', 'skew'),
             'tr_BR_first': ('Tr_1 B R = I', 'trbr'), 'tr_BR_second': ('Tr_2 C R = I', 'trbr'),
             'CB_scalar_power': ('C B = q^(-2a) I', 'cb'), 'CB_identity': ('C B = I', 'cb')}
    for key in sorted(cert.identities):
        label, anchor = names[key]
        run.check(label, anchor, lambda key=key: (cert.identities[key], cert.witnesses.get(key)))
    if not cert.skew_invertible:
        raise Aborted('braiding is not skew-invertible')
    sk = ctx.skew
    run.check('B, C and a', 'bmat', lambda: (True, None, {'B': sk.B.to_strings(), 'C': sk.C.to_strings(),
                                                           'a': sk.a, 'TrC': str(sk.trC)}))
    ext = ctx.ext
    for name, dm in sorted(invariance_defects(ext).items()):
        run.check('pairing invariance %s' % name, 'dual', lambda dm=dm: (dm.is_zero(), _first(dm)))
    for name, ok in extension_class_checks(ext).items():
        run.check('extended braiding: %s' % name, 'dual', lambda ok=ok: ok)
    for name, ok in end_braiding_checks(ctx.end).items():
        run.check('R_End(V) %s' % name, 'end', lambda ok=ok: ok)
    d1, d2 = composition_invariance_defects(ctx.end)
    run.check('composition invariance, left factor', 'comp', lambda: (d1.is_zero(), _first(d1)))
    run.check('composition invariance, right factor', 'comp', lambda: (d2.is_zero(), _first(d2)))


def _first(m):
    w = m.first_nonzero()
    return None if w is None else {'row': w[0], 'col': w[1], 'value': str(w[2])}


def suite_decompose(run, ctx):
    for k in range(2, ctx.k + 1):
        bank = young_projectors(ctx.r, k)
        run.check('projector bank k=%d' % k, 'young', lambda: True)
        run.check('isotypic projectors central k=%d' % k, 'young', lambda bank=bank: isotypic_central(bank))
        parts = decompose(ctx.r, k, bank)
        table = [['+'.join(map(str, p.parts)), a, dim] for p, a, dim in parts]
        run.check('decomposition k=%d' % k, 'sw',
                  lambda table=table: (sum(x[2] for x in table) == ctx.r.n ** k, None, table))


def suite_mrea(run, ctx):
    rels = ctx.rels
    run.check('relation set', 'mrea', lambda: (True, None, {'relations': rels.count}))
    run.check('(eq-form) spans the same relations', 'eqform', lambda: eq_form_equivalent(rels))
    maps = bialgebra_maps(ctx.r)
    run.check('counit laws', 'delta', lambda: (maps is not None))
    if ctx.r.cls != 'hecke':
        run.check('vector representation', 'rep', lambda: _rep_ok(ctx.v, rels))
        run.check('covector representation', 'rep', lambda: _rep_ok(ctx.vd, rels))
        return
    reps = [ctx.v, ctx.vd]
    vvd = tensor_rep(ctx.v, ctx.vd, ctx.ext)
    vv = tensor_rep(ctx.v, ctx.v, ctx.ext)
    reps += [vvd, vv]
    bank = young_projectors(ctx.r, 2)
    for key in bank.keys():
        e = bank.projectors[key]
        reps.append(restrict_rep(vv, e, 'V(x)V|%s' % '+'.join(map(str, key[0]))))
    for rho in reps:
        run.check('representation %s' % rho.name, 'rep', lambda rho=rho: _rep_ok(rho, rels))


def _rep_ok(rho, rels):
    w = check_representation(rho, rels)
    return w is None, w, {'dim': rho.dim, 'chi': None if rho.chi is None else str(rho.chi)}


def suite_bracket(run, ctx):
    r = ctx.r
    if r.cls == 'involutive':
        report, _ = involutive_axioms_check(r, ctx.ext, ctx.end, degree=min(ctx.d, 3 if r.n <= 2 else 2))
        run.report('involutive', 'gen-lie', report)
    qp = ctx.qp
    run.check('Q satisfies its minimal polynomial', 'qform', lambda: qp.polynomial_ok)
    run.check('Q Yang-Baxter', 'qform', lambda: qp.ybe)
    bd = ctx.bd
    rep = verify_bracket_axioms(bd, ctx.ext, ctx.end, qp)
    for name, ok, w in rep.entries:
        anchor = 'qskew' if 'skew' in name or 'A_q' in name else 'qjac' if 'Jacobi' in name else 'last'
        run.check(name, anchor, lambda ok=ok, w=w: (ok, w))
    ad = adjoint_rep(bd)
    run.check('adjoint action is a representation', 'ad', lambda: _rep_ok(ad, ctx.rels))
    if r.cls == 'hecke':
        tr = tensor_rep(ctx.v, ctx.vd, ctx.ext)
        run.check('adjoint action equals rho_V(x)V*', 'ad', lambda: all(a == b for a, b in zip(ad.images, tr.images)))
        run.check('bracket identity in the vector representation', 'qform',
                  lambda: (lambda w: (w is None, w))(bracket_identity_in_rep(bd, ctx.v)))
        run.check('q = 1 limit gives gl(N)', 'classical',
                  lambda: bd.bracket.evaluate_at(1) == classical_gl(r.n).evaluate_at(1))


def suite_sl(run, ctx):
    sk = ctx.skew
    if not sk.trC:
        try:
            sl_present(ctx.rels, sk)
        except SlUnavailable as exc:
            run.check('sl-reduction unavailable, Tr C = 0', 'sl-quo', lambda: (True, None, str(exc)))
        return
    slp = sl_present(ctx.rels, sk)
    run.check('back-substitution of the (F, ell) system gives the mREA relations', 'shift', lambda: slp.equivalent)
    run.check('Tr_R F = 0', 'sl-quo', lambda: slp.trace_vanishes)
    run.report('ell', 'sl-quo', ell_center_check(ctx.rels, sk, [ctx.v, ctx.vd]))
    sa = sl_adjoint_rep(ctx.bd, slp)
    run.report('sl-ad', 'sl-ad', sa.report)
    hecke = ctx.r.cls == 'hecke'
    run.check('sl-adjoint action %s the restricted bracket' % ('differs from' if hecke else 'equals'), 'sl-ad',
              lambda: sa.coincides_with_restricted_bracket != hecke)
    w = restricted_bracket_jacobi(ctx.bd, slp)
    if hecke:
        run.check('restricted bracket violates (q-Jac) (expected)', 'qjac', lambda: (w is not None, None, w))
    else:
        run.check('restricted bracket satisfies the Jacobi identity', 'qjac', lambda: (w is None, w))
    for rho in (ctx.v, ctx.vd):
        if hecke:
            for z in (ONE, q, 2):
                run.check('z-twist of %s, z=%s' % (rho.name, z), 'z-twist',
                          lambda rho=rho, z=z: _rep_ok(z_twist(rho, z, ctx.r, sk, ctx.rels).rep, ctx.rels))
        red = sl_reduce_rep(rho, sk, slp)
        run.check('reduced %s satisfies (sl-rea) and kills ell' % rho.name, 'sl-red',
                  lambda red=red: _rep_ok(red, slp.quotient))


def _sym_dims(even, odd, d):
    out = []
    for m in range(d + 1):
        out.append(sum(comb(even + m - j - 1, m - j) * comb(odd, j) for j in range(m + 1)) if even else comb(odd, m))
    return out


def suite_pbw(run, ctx):
    r = ctx.r
    d = ctx.d
    n2 = r.n ** 2
    dims1 = filtered_dimension(ctx.rels, d).dims
    dims0 = filtered_dimension(relation_set(r, ZERO), d).dims
    run.check('filtered dims, hbar = 1 vs hbar = 0', 'pbw', lambda: (dims1 == dims0, None,
                                                                     {'hbar=1': list(dims1), 'hbar=0': list(dims0)}))
    if r.origin == 'super_flip':
        m, n = r.params
        even, odd = m * m + n * n, 2 * m * n
    elif r.origin in ('flip', 'standard_a_series'):
        even, odd = n2, 0
    else:
        return
    # cumulative counts of the (super)symmetric algebra on End(V)
    model = [sum(_sym_dims(even, odd, d)[:m + 1]) for m in range(d + 1)]
    run.check('filtered dims match the symmetric algebra', 'pbw', lambda: (list(dims1) == model, None, model))


SUITE_FUNCS = {'certify': suite_certify, 'decompose': suite_decompose, 'mrea': suite_mrea,
               'bracket': suite_bracket, 'sl': suite_sl, 'pbw': suite_pbw}


def run_suite(suite, spec, r, k=None, d=None, timing=False):
    if suite not in SUITES:
        raise ValueError('unknown suite %r' % suite)
    k = 3 if k is None else k
    if not 1 <= k <= MAX_DEGREE or r.n ** k > 81:
        raise ValueError('decompose degree %d is outside the supported range' % k)
    d = degree_cap() if d is None else d
    if d > degree_cap():
        raise ValueError('pbw degree %d exceeds the cap %d' % (d, degree_cap()))
    run = Runner(timing)
    ctx = Context(r, k, d)
    order = ['certify', 'decompose', 'mrea', 'bracket', 'sl', 'pbw'] if suite == 'all' else [suite]
    error = None
    try:
        for name in order:
            SUITE_FUNCS[name](run, ctx)
    except Aborted as exc:
        error = str(exc)
    except (ArithmeticError, ValueError) as exc:
        error = '%s: %s' % (type(exc).__name__, exc)
    passed = sum(1 for e in run.entries if e['pass'])
    return {
        'tool': 'qlab',
        'version': __version__,
        'input': {'symmetry': spec, 'suite': suite, 'k': k, 'd': d},
        'entries': run.entries,
        'summary': {'checks': len(run.entries), 'passed': passed, 'failed': len(run.entries) - passed},
        'error': error,
    }


def emit(report, fmt='json'):
    if fmt == 'json':
        return json.dumps(report, sort_keys=True, indent=2) + '\n'
    if fmt != 'markdown':
        raise ValueError('unknown format %r' % fmt)
    lines = ['# qlab report', '',
             '- version: %s' % report.get('version', ''),
             '- input: `%s`' % json.dumps(report.get('input', {}), sort_keys=True), '',
             '| check | anchor | result | witness |', '|---|---|---|---|']
    for e in report.get('entries', []):
        w = '' if e.get('witness') is None else '`%s`' % json.dumps(e['witness'], sort_keys=True)
        lines.append('| %s | %s | %s | %s |' % (e['name'], e['anchor'], 'pass' if e['pass'] else 'FAIL',
                                                w.replace('|', '\\|')))
    s = report.get('summary', {})
    lines += ['', '%d checks, %d passed, %d failed' % (s.get('checks', 0), s.get('passed', 0), s.get('failed', 0))]
    if report.get('error'):
        lines.append('')
        lines.append('aborted: %s' % report['error'])
    return '\n'.join(lines) + '\n'


def _builtin_spec(args):
    spec = {'kind': args.builtin}
    if args.builtin == 'super_flip':
        spec['m'] = args.m
    spec['n'] = args.n
    return spec


def main(argv=None):
    p = argparse.ArgumentParser(prog='qlab', description='Exact checks for braidings and reflection equation algebras.')
    p.add_argument('suite', choices=SUITES)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument('--spec', help='JSON file or inline JSON braiding spec')
    src.add_argument('--builtin', choices=['flip', 'super_flip', 'standard_a_series'])
    p.add_argument('--n', type=int, default=2)
    p.add_argument('--m', type=int, default=1, help='even dimension for super_flip')
    p.add_argument('--k', type=int, default=None, help='tensor degree for decompose (default 3)')
    p.add_argument('--d', type=int, default=None, help='degree for pbw (default QLAB_DEGREE_CAP or %d)' % DEFAULT_DEGREE_CAP)
    p.add_argument('--out')
    p.add_argument('--format', choices=['json', 'markdown'], default='json')
    p.add_argument('--timing', action='store_true', help='record wall time per check (breaks byte-identity)')
    args = p.parse_args(argv)
    try:
        if args.spec is not None:
            spec, r = parse_spec(args.spec)
        else:
            spec = _builtin_spec(args)
            r = build_symmetry(spec)
        report = run_suite(args.suite, spec, r, args.k, args.d, args.timing)
    except SpecError as exc:
        print('qlab: %s' % exc, file=sys.stderr)
        return 2
    except BraidingError as exc:
        print('qlab: %s' % exc, file=sys.stderr)
        if exc.witness is not None:
            print(json.dumps(_plain(exc.witness), sort_keys=True), file=sys.stderr)
        return 2
    except ValueError as exc:
        print('qlab: %s' % exc, file=sys.stderr)
        return 2
    text = emit(report, args.format)
    if args.out:
        with open(args.out, 'w') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report['error']:
        return 2
    return 0 if report['summary']['failed'] == 0 else 1


if __name__ == '__main__':
    sys.exit(main())
