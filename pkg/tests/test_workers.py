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

import threading
import time

import pytest

import intervalowa
from intervalowa.workers import WorkQueue, WorkQueueManager


def test_imap_keeps_task_order():
    def slow_square(x):
        # Early tasks finish last
        time.sleep(0.002 * (10 - x))
        return x * x

    manager = WorkQueueManager(slow_square, thread_limit=4)
    assert list(manager.imap(range(10))) == [x * x for x in range(10)]
    assert manager.map([]) == []


def test_exceptions_propagate():
    def fail_on_three(x):
        if x == 3:
            raise ValueError('three')
        return x

    manager = WorkQueueManager(fail_on_three, thread_limit=2)
    seen = []
    with pytest.raises(ValueError, match='three'):
        for value in manager.imap(range(8)):
            seen.append(value)
    assert seen == [0, 1, 2]


def test_single_thread_runs_inline():
    threads = set()
    manager = WorkQueueManager(lambda x: threads.add(threading.current_thread()), thread_limit=1)
    manager.map(range(5))
    assert threads == {threading.current_thread()}


def test_work_queue_draws_tasks_lazily():
    drawn = []

    def tasks():
        for name in ['a', 'b', 'c']:
            drawn.append(name)
            yield name

    queue = WorkQueue(tasks())
    assert queue.get_next() == (0, 'a')
    assert drawn == ['a']
    assert not queue.done(1)
    queue.enabled = False
    assert queue.get_next() is None
    assert drawn == ['a']


def test_work_queue_done_after_last_task():
    queue = WorkQueue(['a'])
    assert queue.get_next() == (0, 'a')
    assert queue.get_next() is None
    assert queue.exhausted
    assert not queue.done(0)
    assert queue.done(1)


def test_imap_over_generator():
    manager = WorkQueueManager(lambda x: x + 1, thread_limit=3)
    assert list(manager.imap(x for x in range(50))) == list(range(1, 51))
    assert list(manager.imap(x for x in [])) == []


def test_generator_errors_propagate():
    def tasks():
        yield 1
        yield 2
        raise KeyError('broken')

    manager = WorkQueueManager(lambda x: x, thread_limit=2)
    seen = []
    with pytest.raises(KeyError, match='broken'):
        for value in manager.imap(tasks()):
            seen.append(value)
    assert seen == [1, 2]


def test_thread_limit_from_environment(monkeypatch):
    monkeypatch.setenv(intervalowa.ENV_THREADS, '3')
    assert intervalowa.thread_limit() == 3
    assert WorkQueueManager(abs).thread_limit == 3
    assert WorkQueueManager(abs, thread_limit=2).thread_limit == 2


@pytest.mark.parametrize('value', ['0', '-2', 'many'])
def test_invalid_thread_limit_falls_back(monkeypatch, value):
    monkeypatch.setenv(intervalowa.ENV_THREADS, value)
    monkeypatch.setattr('os.cpu_count', lambda: 6)
    assert intervalowa.thread_limit() == 6
