# -*- coding: utf-8 -*-
#
# intervalowa - Ordered weighted averaging under interval uncertainty
# Copyright (c) 2024 The intervalowa developers
#
# intervalowa is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 3 of the License, or
# (at your option) any later version.
#
# intervalowa is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

#
#  intervalowa.cli - Command line interface
#

import argparse
import logging
import sys

import intervalowa
from intervalowa import config as configmodule
from intervalowa import discrete, experiments, instancefile, log, sampling, solvers, util
from intervalowa.distribution import build_distribution, hurwicz_value, interval_owa_exact, var_profile
from intervalowa.errors import IntervalOWAError, ParameterError
from intervalowa.generators import INSTANCE_TYPES, generate_instance
from intervalowa.weights import parse_cumulative_spec, parse_weight_spec, weight_profile

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

SOLVERS = ('sampling', 'greedy', 'yager', 'midpoint')


def _write_output(text, filename):
    if filename is None or filename == '-':
        sys.stdout.write(text)
    else:
        util.write_text_atomically(filename, text)
        logger.info('Wrote %s', filename)


def cmd_generate(args):
    instance = generate_instance(args.type, args.n, args.seed, p=args.p, rank=args.rank)
    _write_output(instancefile.serialize_instance(instance), args.output)


def cmd_evaluate(args):
    instance = instancefile.load_instance(args.instance)
    x = instancefile.load_solution(args.solution, instance.n)
    w = parse_weight_spec(args.weight)
    if args.method == 'exact':
        value = interval_owa_exact(instance, w, x, tol=args.tol)
    elif args.method == 'hurwicz':
        # Limit of the smoothed density as its epsilon goes to 0
        if w.kind != 'hurwicz':
            raise ParameterError(_('--method hurwicz needs a hurwicz:MIX:EPS weight, got %s') % w.spec)
        value = hurwicz_value(instance, x, w.params[0])
    else:
        value = sampling.interval_owa_sampled(instance, w, x, args.K, args.seed)
    print(util.format_number(value))


def cmd_solve(args):
    instance = instancefile.load_instance(args.instance)
    if args.solver == 'midpoint':
        report = solvers.solve_midpoint(instance)
    elif args.solver == 'yager':
        report = solvers.solve_yager(instance, parse_cumulative_spec(args.weight))
    elif args.solver == 'greedy':
        report = solvers.solve_greedy_matroid(instance, parse_weight_spec(args.weight), args.K, args.seed)
    else:
        report = solvers.solve_sampling(instance, parse_weight_spec(args.weight), args.K, args.seed,
                                        inner=args.inner, max_iters=args.max_iters)

    logger.info('%r', report)
    _write_output(report.to_json(), args.out)


def cmd_export_milp(args):
    instance = instancefile.load_instance(args.instance)
    w = parse_weight_spec(args.weight)
    sample = sampling.sample_scenarios(instance, args.K, args.seed, w)
    _write_output(discrete.export_milp(sample, instance.feasibility), args.output)


def cmd_profile(args):
    instance = instancefile.load_instance(args.instance)
    x = instancefile.load_solution(args.solution, instance.n)
    t, values = var_profile(build_distribution(instance, x), args.points)
    lines = ['t,var']
    lines.extend('%s,%s' % (util.format_number(a), util.format_number(b)) for a, b in zip(t, values))
    _write_output('\n'.join(lines) + '\n', args.output)


def cmd_weight_profile(args):
    densities = [parse_weight_spec(spec) for spec in args.weights]
    t, curves = weight_profile(densities, args.points)
    header = ['t']
    for w in densities:
        header.extend(['w(%s)' % w.spec, 'W(%s)' % w.spec])
    lines = [','.join(header)]
    for k in range(len(t)):
        row = [t[k]]
        for values, cumulative in curves:
            row.extend([values[k], cumulative[k]])
        lines.append(','.join(util.format_number(value) for value in row))
    _write_output('\n'.join(lines) + '\n', args.output)


def cmd_experiment(args):
    settings = configmodule.load_config(args.config, args.set)
    config = settings.experiment_config()
    rows = experiments.run_experiment(config)
    settings.save(experiments.config_file(config))
    results_file, plot_file = experiments.output_files(config)
    print(_('%(rows)d rows written to %(results)s, averages in %(plot)s')
          % {'rows': len(rows), 'results': results_file, 'plot': plot_file})


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(_('expected a positive integer, got %s') % text)
    return value


def _seed(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(_('expected a nonnegative integer, got %s') % text)
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog='intervalowa', description=intervalowa.__tagline__)
    parser.add_argument('--version', action='version', version='%(prog)s ' + intervalowa.__version__)
    parser.add_argument('-v', '--verbose', action='store_true', help=_('print debugging output'))
    parser.add_argument('-q', '--quiet', action='store_true', help=_('only print errors'))
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    p = subparsers.add_parser('generate', help=_('generate a random instance'))
    p.add_argument('--type', choices=INSTANCE_TYPES, required=True)
    p.add_argument('--n', type=_positive_int, required=True)
    p.add_argument('--seed', type=_seed, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument('--p', type=int, help=_('selection size (default: n // 2)'))
    group.add_argument('--rank', type=int, help=_('use a uniform matroid of this rank'))
    p.add_argument('-o', '--output', help=_('instance file to write (default: stdout)'))
    p.set_defaults(func=cmd_generate)

    p = subparsers.add_parser('evaluate', help=_('interval OWA value of a solution'))
    p.add_argument('instance')
    p.add_argument('solution')
    p.add_argument('--weight', required=True, help=_('weight density, e.g. power:5 or cvar:0.1'))
    p.add_argument('--method', choices=('exact', 'sample', 'hurwicz'), default='exact',
                   help=_('hurwicz gives the closed-form limit of a hurwicz:MIX:EPS weight'))
    p.add_argument('--K', type=_positive_int, default=100000, help=_('scenarios for --method sample'))
    p.add_argument('--seed', type=_seed, default=0)
    p.add_argument('--tol', type=float, default=1e-6)
    p.set_defaults(func=cmd_evaluate)

    p = subparsers.add_parser('solve', help=_('solve an instance'))
    p.add_argument('instance')
    p.add_argument('--solver', choices=SOLVERS, required=True)
    p.add_argument('--inner', choices=solvers.INNER_SOLVERS, default='exact')
    p.add_argument('--max-iters', type=int, default=1000)
    p.add_argument('--K', type=_positive_int, default=100)
    p.add_argument('--seed', type=_seed, default=0)
    p.add_argument('--weight', default='power:5')
    p.add_argument('--out', help=_('JSON report file to write (default: stdout)'))
    p.set_defaults(func=cmd_solve)

    p = subparsers.add_parser('export-milp', help=_('write the discrete OWA model in LP format'))
    p.add_argument('instance')
    p.add_argument('--weight', required=True)
    p.add_argument('--K', type=_positive_int, required=True)
    p.add_argument('--seed', type=_seed, required=True)
    p.add_argument('-o', '--output', required=True)
    p.set_defaults(func=cmd_export_milp)

    p = subparsers.add_parser('profile', help=_('VaR curve of a solution as CSV'))
    p.add_argument('instance')
    p.add_argument('solution')
    p.add_argument('--points', type=_positive_int, default=101)
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_profile)

    p = subparsers.add_parser('weight-profile', help=_('weight densities and their cumulatives as CSV'))
    p.add_argument('weights', nargs='+', metavar='SPEC', help=_('weight densities, e.g. power:2 power:5'))
    p.add_argument('--points', type=_positive_int, default=101)
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_weight_profile)

    p = subparsers.add_parser('experiment', help=_('run a benchmark experiment'))
    p.add_argument('config', help=_('JSON configuration file'))
    p.add_argument('--set', action='append', default=[], metavar='KEY=VALUE',
                   help=_('override a configuration value, e.g. sampling.K_eval=1000'))
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    log.setup(args.verbose, args.quiet)

    try:
        args.func(args)
    except IntervalOWAError as e:
        logger.debug('Command %s failed', args.command, exc_info=True)
        print(_('Error: %s') % e, file=sys.stderr)
        return 1
    except OSError as e:
        print(_('Error: %s') % e, file=sys.stderr)
        return 1

    return 0
