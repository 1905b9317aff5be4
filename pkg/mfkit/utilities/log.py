"""Logging related utility functions."""

import datetime


hom_cache = []

def log_hom_dimension(
        label,
        n,
        degree,
        dim,
        log_file_name='hom_log',
        max_cache_size=100,
        force_file_write=False
    ):
    """
    Log a Hom dimension to a csv file.

    Args:
        label: `str` - Name of the pair of factorizations.
        n: `int` - Cohomological degree.
        degree: `int` - Internal degree, `None` for capped computations.
        dim: `int` - Dimension to log.
        log_file_name: `str` - Name of the log file.
        max_cache_size: `int` - Maximum number of lines to cache before writing to the file.
        force_file_write: `bool` - If `True`, the cache will be written to the file regardless of its size.
    """

    # Current date and time
    now = datetime.datetime.now()
    date = now.strftime('%Y,%m,%d')
    time = now.strftime('%H,%M,%S,%f')

    # Append time and the dimension to the cache
    hom_cache.append('{0},{1},{2},{3},{4},{5}'.format(date, time, label, n, '' if degree is None else degree, dim))

    # If the cache is full or we are forcing a file write, write the cache to the log file
    if len(hom_cache) >= max_cache_size or force_file_write:
        flush_hom_log(log_file_name)


def flush_hom_log(log_file_name='hom_log'):
    """
    Write every cached line to the log file.

    Args:
        log_file_name: `str` - Name of the log file.
    """

    if not hom_cache:
        return

    # Open file for appending or create it if it doesn't exist
    with open('{0}.csv'.format(log_file_name), 'a') as log_file:
        for line in hom_cache:
            log_file.write('{0}\n'.format(line))

    # Clear the cache
    hom_cache.clear()
