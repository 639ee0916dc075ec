import multiprocessing
import sys

import kac_typicality.utils as ut


class LocalWorkerPool:
    """Runs independent tasks on local worker processes.

    Tasks are module-level functions with picklable arguments, so each worker
    builds its own fields and modules and nothing mutable is shared. Results
    come back in submission order, which keeps reports independent of the
    number of workers.

    Args:
        num_workers (int): Number of processes. With ``1``, tasks run in the
            calling process.
        verbose (bool, optional): Print a progress line when done.
    """

    def __init__(self, num_workers, verbose=False):
        assert num_workers >= 1
        self.num_workers = num_workers
        self.verbose = verbose
        self.timer = ut.TimerManager()
        self.timer.create_timer("pool")

    def run(self, fn, args_lst):
        self.timer.tick_timer("pool")
        if self.num_workers == 1 or len(args_lst) <= 1:
            results = [fn(*args) for args in args_lst]
        else:
            with multiprocessing.Pool(self.num_workers) as pool:
                results = pool.starmap(fn, args_lst)
        if self.verbose:
            print("Tasks done: %d, workers: %d, seconds: %0.2f" %
                  (len(results), self.num_workers,
                   self.timer.get_time_since_last_tick("pool")),
                  file=sys.stderr)
        return results


def run_tasks(fn, args_lst, num_workers=1, verbose=False):
    return LocalWorkerPool(num_workers, verbose=verbose).run(fn, args_lst)
