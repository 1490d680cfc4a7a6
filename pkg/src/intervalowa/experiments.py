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
#  intervalowa.experiments - Benchmark runs with CSV and plot-data output
#
#  Experiment 1 compares the sampling and greedy solvers over a range of
#  sample sizes K. Experiment 2 compares greedy at a fixed K with the
#  Yager and midpoint baselines. Experiment 3 sweeps the risk attitude
#  alpha over the same methods. Every chosen solution is scored by
#  evaluate_final() on a large common sample per instance.
#

import csv
import io
import logging
import math
import os
import threading

import intervalowa
from intervalowa import solvers, util
from intervalowa.generators import generate_instance
from intervalowa.sampling import derive_seed, interval_owa_sampled
from intervalowa.weights import cumulative_power, make_power_weight
from intervalowa.workers import WorkQueueManager

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

COLUMNS = ('experiment', 'instance_type', 'n', 'p', 'alpha', 'K', 'instance_id',
           'method', 'objective', 'wall_time_s', 'seed')

PLOT_COLUMNS = ('method', 'alpha', 'K', 'count', 'objective_mean', 'objective_stderr',
                'wall_time_mean', 'wall_time_stderr')


def evaluate_final(instance, w, x, K_eval, seed, thread_limit=None):
    """Sampled interval OWA of x with K_eval scenarios

    Callers pass the same seed for every solution of one instance, so all
    methods are scored on common random numbers.
    """
    return interval_owa_sampled(instance, w, x, K_eval, seed, thread_limit)


class FinalEvaluator(object):
    """evaluate_final() memoized per (instance id, alpha, solution)"""

    def __init__(self, K_eval, base_seed, thread_limit=None):
        self.K_eval = K_eval
        self.base_seed = base_seed
        self.thread_limit = thread_limit
        self._cache = {}
        self._lock = threading.Lock()

    def seed_for(self, instance_id):
        return derive_seed(self.base_seed, 'evaluation', instance_id)

    def __call__(self, instance_id, instance, alpha, w, x):
        key = (instance_id, alpha, x)
        with self._lock:
            if key in self._cache:
                return self._cache[key]

        value = evaluate_final(instance, w, x, self.K_eval, self.seed_for(instance_id), self.thread_limit)
        with self._lock:
            self._cache[key] = value
        return value

    def __len__(self):
        return len(self._cache)


class _Cell(object):
    """All runs on one generated instance"""

    def __init__(self, config, instance_id, evaluator, thread_limit):
        self.config = config
        self.instance_id = instance_id
        self.evaluator = evaluator
        self.thread_limit = thread_limit
        self.instance = generate_instance(config.instance_type, config.n,
                                          derive_seed(config.seed, 'instance', instance_id), p=config.p)

    def _row(self, alpha, w, report, method=None):
        objective = self.evaluator(self.instance_id, self.instance, alpha, w, report.solution)
        config = self.config
        return {
            'experiment': config.experiment,
            'instance_type': config.instance_type,
            'n': config.n,
            'p': config.p,
            'alpha': alpha,
            'K': report.K,
            'instance_id': self.instance_id,
            'method': method or report.solver,
            'objective': objective,
            'wall_time_s': report.wall_time if config.timings else None,
            'seed': report.seed,
        }

    def _solver_seed(self, K):
        return derive_seed(self.config.seed, 'solver', self.instance_id, K)

    def _sampling(self, w, K):
        config = self.config
        return solvers.solve_sampling(self.instance, w, K, self._solver_seed(K), config.inner,
                                      config.max_iters, self.thread_limit, config.enumeration_cap)

    def _greedy(self, w, K):
        return solvers.solve_greedy_matroid(self.instance, w, K, self._solver_seed(K),
                                            self.config.use_cache, self.thread_limit)

    def run_sampling_vs_greedy(self):
        rows = []
        for alpha in self.config.alphas:
            w = make_power_weight(alpha)
            for K in self.config.K_values:
                rows.append(self._row(alpha, w, self._sampling(w, K)))
                rows.append(self._row(alpha, w, self._greedy(w, K)))
        return rows

    def run_comparison(self):
        config = self.config
        rows = []
        for alpha in config.alphas:
            w = make_power_weight(alpha)
            for method in config.methods:
                if method == 'sampling':
                    report = self._sampling(w, config.sampling_K)
                elif method == 'greedy':
                    report = self._greedy(w, config.greedy_K)
                elif method == 'yager':
                    # Same attitude as the power density: W(y) = 1 - (1 - y)^alpha
                    report = solvers.solve_yager(self.instance, cumulative_power(alpha))
                else:
                    report = solvers.solve_midpoint(self.instance)
                rows.append(self._row(alpha, w, report, method))
        return rows

    def run(self):
        logger.debug('Running cell %d of experiment %d', self.instance_id, self.config.experiment)
        if self.config.experiment == 1:
            return self.run_sampling_vs_greedy()
        return self.run_comparison()


def _format(value):
    if value is None:
        return ''
    if isinstance(value, float):
        return util.format_number(value)
    return str(value)


def _mean_and_stderr(values):
    count = len(values)
    mean = math.fsum(values) / count
    if count < 2:
        return mean, 0.0
    variance = math.fsum((v - mean) ** 2 for v in values) / (count - 1)
    return mean, math.sqrt(variance / count)


def aggregate(rows):
    """Averages per (method, alpha, K) in order of first appearance

    Each aggregate carries the count, the mean objective and its standard
    error and, when the rows carry timings, the same for the wall time.
    """
    groups = {}
    for row in rows:
        groups.setdefault((row['method'], row['alpha'], row['K']), []).append(row)

    result = []
    for (method, alpha, K), members in groups.items():
        objective_mean, objective_stderr = _mean_and_stderr([r['objective'] for r in members])
        times = [r['wall_time_s'] for r in members if r['wall_time_s'] is not None]
        time_mean, time_stderr = _mean_and_stderr(times) if times else (None, None)
        result.append({
            'method': method,
            'alpha': alpha,
            'K': K,
            'count': len(members),
            'objective_mean': objective_mean,
            'objective_stderr': objective_stderr,
            'wall_time_mean': time_mean,
            'wall_time_stderr': time_stderr,
        })
    return result


class CsvSink(object):
    """Rows written and flushed one at a time"""

    def __init__(self, filename, columns):
        self.filename = filename
        self.columns = columns
        self._fp = open(filename, 'w', encoding='utf-8', newline='')
        self._writer = csv.writer(self._fp, lineterminator='\n')
        self._writer.writerow(columns)
        self._fp.flush()

    def write(self, row):
        self._writer.writerow([_format(row[column]) for column in self.columns])
        self._fp.flush()

    def close(self):
        self._fp.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()


def format_rows(rows, columns):
    """CSV text of rows with the given columns, header first"""
    fp = io.StringIO()
    writer = csv.writer(fp, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format(row[column]) for column in columns])
    return fp.getvalue()


def output_files(config):
    """Paths of the per-run CSV and the plot-data CSV"""
    stem = os.path.join(config.output, 'experiment%d' % config.experiment)
    return stem + '.csv', stem + '_plot.csv'


def config_file(config):
    """Path of the JSON settings a run was started with"""
    return os.path.join(config.output, 'experiment%d_config.json' % config.experiment)


def run_experiment(config):
    """Run the experiment described by an ExperimentConfig

    Rows are written to <output>/experiment<N>.csv as soon as each instance
    is done, in instance order; the per-(method, alpha, K) aggregates go to
    <output>/experiment<N>_plot.csv at the end. Returns the per-run rows.
    """
    # Validation runs again here for configs built outside of Config
    config.validate()

    thread_limit = config.thread_limit or intervalowa.thread_limit()
    # Cells run on the worker threads, so the work inside a cell runs inline
    cell_parallel = thread_limit > 1 and config.instances > 1
    inner_limit = 1 if cell_parallel else thread_limit
    evaluator = FinalEvaluator(config.K_eval, config.seed, inner_limit)
    if not util.make_directory(config.output):
        raise OSError(_('Cannot create output directory %s') % config.output)
    results_file, plot_file = output_files(config)

    logger.info('Experiment %d: %d instances of type %s, n=%d, p=%d',
                config.experiment, config.instances, config.instance_type, config.n, config.p)

    manager = WorkQueueManager(lambda instance_id: _Cell(config, instance_id, evaluator, inner_limit).run(),
                               thread_limit)
    rows = []
    with CsvSink(results_file, COLUMNS) as sink:
        for instance_id, cell_rows in enumerate(manager.imap(range(config.instances))):
            for row in cell_rows:
                sink.write(row)
            rows.extend(cell_rows)
            logger.info('Instance %d of %d done', instance_id + 1, config.instances)

    util.write_text_atomically(plot_file, format_rows(aggregate(rows), PLOT_COLUMNS))
    logger.info('Wrote %s and %s (%d final evaluations)', results_file, plot_file, len(evaluator))
    return rows
