"""Printing related utility functions."""


def print_suite_start(suite_name):
    """
    Print debug information about the start of a check suite.

    Args:
        suite_name: `str` - Name of the suite that is being started.
    """

    print('Starting {0}.'.format(suite_name))


def print_suite_end(
        suite_name,
        passed,
        total
    ):
    """
    Print the outcome of a check suite.

    Args:
        suite_name: `str` - Name of the suite that has ended.
        passed: `int` - Number of passing checks.
        total: `int` - Number of checks that were run.
    """

    verdict = 'passed' if passed == total else 'FAILED'
    print('\n{0} {1} ({2}/{3}).'.format(suite_name, verdict, passed, total))


def print_check_status(
        check_index,
        check_count,
        check_name
    ):
    """
    Print the progress of a running suite on a single line.

    Args:
        check_index: `int` - Index of the current check, starting at one.
        check_count: `int` - Number of checks in the suite.
        check_name: `str` - Label of the current check.
    """

    print('Check: {0}/{1} {2}'.format(check_index, check_count, check_name), end='\r')


def print_report(report):
    """
    Print a verification report, one line per failure.

    Args:
        report: `Report` - Report to print.
    """

    print(str(report))


def print_hom_table(table):
    """
    Print Hom dimensions as aligned rows.

    Args:
        table: `dict` - (n, degree) -> `HomClasses`.
    """

    print('{0:>4} {1:>8} {2:>5} {3}'.format('n', 'degree', 'dim', 'status'))
    for (n, t), classes in sorted(table.items(), key=lambda item: (item[0][0], item[0][1] or 0)):
        status = 'exact' if classes.certified else 'up to cap {0}'.format(classes.cap)
        degree = '-' if t is None else t
        print('{0:>4} {1:>8} {2:>5} {3}'.format(n, degree, classes.dim, status))


def print_e1_table(table, degeneration=None):
    """
    Print the nonzero entries of an E_1 page followed by the totals per total degree.

    Args:
        table: `E1Table` - Page to print.
        degeneration: `Degeneration` - Optional comparison with the direct Hom dimensions.
    """

    print('E1 ({0}) at internal degree {1}'.format(table.variant, table.degree))
    for (p, q), dim in sorted(table.entries.items()):
        print('  E1[{0},{1}] = {2}'.format(p, q, dim))
    for r, total in table.totals.items():
        line = '  r = {0}: sum {1}'.format(r, total)
        if degeneration is not None:
            line += ', Hom {0}{1}'.format(degeneration.direct[r], ' (equal)' if degeneration.equal[r] else '')
        print(line)
    if degeneration is not None:
        print('degenerates' if degeneration.degenerates else str(degeneration.report))
