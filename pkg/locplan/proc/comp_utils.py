# -*- coding: utf-8 -*-
"""
Utilities that spread independent computations (one per block, one per
vertex pair, ...) over several cores

Created on Wed Oct 21 09:12:40 2026
"""
from __future__ import print_function, division, unicode_literals, \
    absolute_import
import time
from multiprocessing import cpu_count
import joblib

from ..base.string_utils import format_time

__all__ = ['parallel_compute', 'recommend_cpu_cores']

# below this many jobs per worker, short jobs run faster serially
MIN_JOBS_PER_CORE = 20


def _as_arg_list(func_args):
    if func_args is None:
        return []
    if isinstance(func_args, tuple):
        return list(func_args)
    if not isinstance(func_args, list):
        raise TypeError('func_args should be a list or tuple of positional '
                        'arguments for func')
    return func_args


def _as_kwarg_dict(func_kwargs):
    if func_kwargs is None:
        return dict()
    if not isinstance(func_kwargs, dict):
        raise TypeError('func_kwargs should be a dictionary of keyword '
                        'arguments for func')
    return func_kwargs


def parallel_compute(jobs, func, cores=None, lengthy_computation=False,
                     func_args=None, func_kwargs=None, verbose=False,
                     joblib_backend='loky'):
    """
    Calls ``func(job, *func_args, **func_kwargs)`` for every job, on several
    cores through joblib when that pays off

    Parameters
    ----------
    jobs : sequence
        Items to map the function to, e.g. the blocks of a decomposition.
        Generators and strings are refused.
    func : callable
        Must be importable at module level when more than one core is used
    cores : uint, optional
        Requested number of logical cores. See ``recommend_cpu_cores``
    lengthy_computation : bool, optional. Default = False
        Set when a single job takes substantial time (realizing large blocks)
    func_args : list or tuple, optional
    func_kwargs : dict, optional
    verbose : bool, optional. Default = False
    joblib_backend : str, optional. Default = 'loky'

    Returns
    -------
    results : list
        In the order of ``jobs`` whatever the schedule
    """
    if not callable(func):
        raise TypeError('func should be callable')
    if isinstance(jobs, (str, bytes)) or not hasattr(jobs, '__len__'):
        raise TypeError('jobs should be a sequence such as a list of blocks')
    jobs = list(jobs)
    func_args = _as_arg_list(func_args)
    func_kwargs = _as_kwarg_dict(func_kwargs)
    if not jobs:
        return []

    used = recommend_cpu_cores(len(jobs), requested_cores=cores,
                               lengthy_computation=lengthy_computation,
                               verbose=verbose)
    if verbose:
        print('Starting {} jobs on {} cores (requested {} cores)'
              ''.format(len(jobs), used, cores))

    t_start = time.time()
    if used == 1:
        if verbose:
            print('Computing serially ...')
        results = [func(job, *func_args, **func_kwargs) for job in jobs]
    else:
        tasks = (joblib.delayed(func)(job, *func_args, **func_kwargs)
                 for job in jobs)
        results = list(joblib.Parallel(n_jobs=used,
                                       backend=joblib_backend)(tasks))

    if verbose:
        print('Finished {} jobs in {}'.format(
            len(jobs), format_time(time.time() - t_start)))
    return results


def _default_free_cores(logical_cores):
    if logical_cores == 1:
        return 0
    return 2 if logical_cores > 4 else 1


def recommend_cpu_cores(num_jobs, requested_cores=None, min_free_cores=None,
                        lengthy_computation=False, verbose=False):
    """
    Number of cores worth using for ``num_jobs`` independent jobs

    Parameters
    ----------
    num_jobs : uint
        Number of jobs, at least 1
    requested_cores : int, optional
        Explicit request, clipped to [1, logical cores]. By default every core
        but ``min_free_cores``
    min_free_cores : uint, optional
        Cores left alone. Default: 0 on a single core machine, 1 up to four
        logical cores and 2 above
    lengthy_computation : bool, optional. Default = False
        Short jobs need at least 20 per core before more than one core is
        used, lengthy ones do not
    verbose : bool, optional. Default = False

    Returns
    -------
    int
    """
    logical_cores = cpu_count()

    if min_free_cores is None:
        min_free_cores = _default_free_cores(logical_cores)
    else:
        if not isinstance(min_free_cores, int):
            raise TypeError('min_free_cores should be an unsigned integer')
        if not 0 <= min_free_cores < logical_cores:
            raise ValueError('min_free_cores should be an unsigned integer '
                             'less than the number of logical cores ({})'
                             ''.format(logical_cores))
    if verbose:
        print('Keeping {} of {} logical cores free'.format(min_free_cores,
                                                           logical_cores))

    if requested_cores is None:
        cores = max(1, logical_cores - min_free_cores)
    elif not isinstance(requested_cores, int):
        raise TypeError('requested_cores should be an unsigned integer')
    else:
        cores = max(1, min(abs(requested_cores), logical_cores))
        if verbose and cores != requested_cores:
            print('Clipped the request for {} cores to {}'
                  ''.format(requested_cores, cores))

    if isinstance(num_jobs, bool) or not isinstance(num_jobs, int):
        raise TypeError('num_jobs should be an unsigned integer')
    if num_jobs < 1:
        raise ValueError('num_jobs should be greater than 0')

    if not lengthy_computation and cores > 1 \
            and num_jobs // cores < MIN_JOBS_PER_CORE:
        cores = max(1, min(cores, num_jobs // (2 * MIN_JOBS_PER_CORE)))
        if verbose:
            print('Too few short jobs per core. Using {} cores'.format(cores))
    return int(cores)
