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
#  workers.py -- Work queue management
#
#  Independent tasks (experiment cells, scenario blocks) are processed by
#  a bounded set of worker threads. Results are handed back by task index,
#  so callers observe the same order whatever the scheduling.
#

import logging
import threading

import intervalowa
from intervalowa import util

logger = logging.getLogger(__name__)


class WorkQueue(object):
    """Hands out (index, task) pairs drawn lazily from an iterable

    changed is notified once the tasks run out, so a consumer waiting for
    results learns that no more will come.
    """

    def __init__(self, tasks, changed=None):
        self._tasks = iter(tasks)
        self._lock = threading.RLock()
        self._changed = changed
        self.issued = 0
        self.exhausted = False
        self.error = None
        self.enabled = True

    def get_next(self):
        """Return the next (index, task) pair, or None when done."""
        with self._lock:
            if self.enabled and not self.exhausted:
                try:
                    task = next(self._tasks)
                except StopIteration:
                    self.exhausted = True
                except Exception as exc:
                    self.error = exc
                    self.exhausted = True
                else:
                    index = self.issued
                    self.issued += 1
                    return index, task

        if self._changed is not None:
            with self._changed:
                self._changed.notify_all()
        return None

    def done(self, index):
        """True once every task was handed out and index is past the last"""
        return self.exhausted and index >= self.issued


class WorkQueueWorker(object):
    def __init__(self, queue, function, deliver, exit_callback):
        self.queue = queue
        self.function = function
        self.deliver = deliver
        self.exit_callback = exit_callback

    def __repr__(self):
        return threading.current_thread().name

    def run(self):
        logger.debug('Starting new thread: %s', self)
        while True:
            item = self.queue.get_next()
            if item is None:
                logger.debug('No more tasks for %s to carry out.', self)
                break

            index, task = item
            try:
                result = self.function(task)
            except BaseException as exc:
                logger.debug('%s failed on task %d', self, index, exc_info=True)
                self.deliver(index, None, exc)
            else:
                self.deliver(index, result, None)

        self.exit_callback(self)


class WorkQueueManager(object):
    """Apply a function to tasks on worker threads

    thread_limit=None uses intervalowa.thread_limit(); a limit of 1 runs
    every task inline on the calling thread. Tasks may come from any
    iterable, including generators; they are drawn as workers get free.
    """

    def __init__(self, function, thread_limit=None):
        self.function = function
        if not thread_limit:
            thread_limit = intervalowa.thread_limit()
        self.thread_limit = max(int(thread_limit), 1)

        self.worker_threads_access = threading.RLock()
        self.worker_threads = []

    def __exit_callback(self, worker_thread):
        with self.worker_threads_access:
            self.worker_threads.remove(worker_thread)

    def imap(self, tasks):
        """Yield function(task) for each task, in task order

        The first exception raised by a task is re-raised here when its
        turn comes; remaining queued tasks are then dropped.
        """
        sized = hasattr(tasks, '__len__')
        if self.thread_limit == 1 or (sized and len(tasks) <= 1):
            for task in tasks:
                yield self.function(task)
            return

        results = {}
        available = threading.Condition()
        queue = WorkQueue(tasks, available)

        def deliver(index, result, exc):
            with available:
                results[index] = (result, exc)
                available.notify_all()

        with self.worker_threads_access:
            spawn = min(self.thread_limit, len(tasks)) if sized else self.thread_limit
            logger.debug('Starting %d threads (%d already running)', spawn, len(self.worker_threads))
            for i in range(spawn):
                worker = WorkQueueWorker(queue, self.function, deliver, self.__exit_callback)
                self.worker_threads.append(worker)
                util.run_in_background(worker.run, daemon=True)

        try:
            index = 0
            while True:
                with available:
                    while index not in results and not queue.done(index):
                        available.wait()
                    if index not in results:
                        break
                    result, exc = results.pop(index)
                if exc is not None:
                    raise exc
                yield result
                index += 1

            if queue.error is not None:
                raise queue.error
        finally:
            queue.enabled = False

    def map(self, tasks):
        return list(self.imap(tasks))
