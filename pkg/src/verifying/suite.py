"""Verification suite

Runs the certification checks on one graph of groups, or on every instance
of the standard suite, and assembles the report documents.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from groups.vertex_group import CyclicGroup, FreeGroup, IntegerGroup
from kernel.functions import KERNEL_FUNCTIONS
from product.graph import complete_graph, cycle_graph, edgeless_graph, path_graph
from utils.ass import status_mark
from utils.logger import log
from verifying.ball import enumerate_ball
from verifying.checks import (
    check_cnd,
    check_coset_stability,
    check_degeneration,
    check_eigensolver,
    check_group_axioms,
    check_invariance,
    check_kernel_identity,
    check_length_bounded_growth,
    check_normal_form_oracle,
    check_pointwise_limit,
    check_properness,
    check_restriction,
    check_schoenberg,
    check_shuffle_invariance,
    check_vanishing,
    check_vertex_gram,
    check_vertex_properness,
)
from verifying.matrix import build_kernel_matrices
from verifying.report import (
    REPORT_VERSION,
    CertReport,
    ReportCollector,
    instance_document,
)

# the exhaustive oracle enumerates every raw word, keep it small
ORACLE_MAX_ORDER = 3
ORACLE_MAX_VERTICES = 3
ORACLE_MAX_LENGTH = 4


@dataclass
class _Run:
    graph: object
    params: object
    ball: object = None
    matrices: dict = field(default_factory=dict)

    @property
    def label(self):
        return self.graph.label()


##############
# the checks #
##############


def _eigensolver(run):
    return [check_eigensolver(run.params.solver)]


def _vertex_groups(run):
    return [check_vertex_gram(run.graph, seed=run.params.seed, tol=run.params.tol)]


def _vertex_properness(run):
    if all(group.kind == 'cyclic' for group in run.graph.groups):
        return []

    return [check_vertex_properness(run.graph)]


def _group_axioms(run):
    return [check_group_axioms(run.graph, run.params.samples, run.params.seed)]


def _normal_form_oracle(run):
    graph = run.graph

    small = graph.size <= ORACLE_MAX_VERTICES and all(
        group.kind == 'cyclic' and group.n <= ORACLE_MAX_ORDER for group in graph.groups
    )
    if not small:
        return []

    return [check_normal_form_oracle(graph, ORACLE_MAX_LENGTH)]


def _degeneration(run):
    if not (run.graph.is_edgeless() or run.graph.is_complete()):
        return []

    return [check_degeneration(run.graph, run.ball)]


def _cnd(run):
    reports = []

    for name in KERNEL_FUNCTIONS:
        M = run.matrices[name]
        report = check_cnd(M, run.params.tol, run.params.solver, f'cnd[{name}]', run.label)
        reports.append(report)

        # exp(-tM) is only meaningful once M is known to be CND
        if report.passed:
            reports += check_schoenberg(
                M,
                run.params.t_list,
                run.params.tol,
                run.params.solver,
                f'schoenberg[{name}]',
                run.label,
            )

    return reports


def _invariance(run):
    return [check_invariance(run.graph, run.params.samples, run.params.seed)]


def _kernel_identity(run):
    return [check_kernel_identity(run.graph, run.params.samples, run.params.seed)]


def _restriction(run):
    return [check_restriction(run.graph, seed=run.params.seed)]


def _shuffle_invariance(run):
    return [check_shuffle_invariance(run.graph, run.params.samples, run.params.seed)]


def _coset_stability(run):
    return [check_coset_stability(run.graph, run.params.samples, run.params.seed)]


def _pointwise_limit(run):
    return [check_pointwise_limit(run.graph, run.ball, run.params.n_list)]


def _vanishing(run):
    return [check_vanishing(run.graph, run.ball)]


def _properness(run):
    return [check_properness(run.graph, run.params.radius, run.params.cap, run.ball)]


def _length_bounded_growth(run):
    for v, group in enumerate(run.graph.groups):
        if group.kind != 'cyclic':
            return [check_length_bounded_growth(run.graph, v)]

    return []


# global mapping of checks, in report order
# format: {name: check_function(run) -> list[CertReport]}
CHECKS = {
    'eigensolver': _eigensolver,
    'vertex_groups': _vertex_groups,
    'vertex_properness': _vertex_properness,
    'group_axioms': _group_axioms,
    'normal_form_oracle': _normal_form_oracle,
    'degeneration': _degeneration,
    'cnd': _cnd,
    'invariance': _invariance,
    'kernel_identity': _kernel_identity,
    'restriction': _restriction,
    'shuffle_invariance': _shuffle_invariance,
    'coset_stability': _coset_stability,
    'pointwise_limit': _pointwise_limit,
    'vanishing': _vanishing,
    'properness': _properness,
    'length_bounded_growth': _length_bounded_growth,
}


##############
# the runner #
##############


def _run_check(run, name, quiet):
    try:
        reports = CHECKS[name](run)
    except Exception as error:
        reports = [
            CertReport(name, run.label, 0, 0.0, run.params.tol, False, detail=f'error: {error}')
        ]

    if reports:
        mark = status_mark(all(r.passed for r in reports))
        log(f'Checking {name} ... {mark}\n', quiet)

    return reports


def run_checks(graph, params, suite='config', names=None, quiet=False):
    """Run the certification checks on one graph of groups

    The ball and the kernel matrices are built once and shared. With
    params.workers > 1 the checks run on a thread pool; the document order
    does not depend on it.

    Args:
        graph (GraphSpec): The graph of groups
        params (SuiteParams): Radius, cap, tolerances, seed, workers, solver
        suite (str): Suite name recorded in the document
        names (list[str]): Subset of CHECKS to run, None for all
        quiet (bool): Do not print progress (still logged to file)

    Returns:
        dict: Report document, see instance_document
    """
    names = list(CHECKS) if names is None else names

    for name in names:
        if name not in CHECKS:
            raise ValueError(f'Error: Unknown check {name!r}')

    run = _Run(graph, params)
    collector = ReportCollector()

    log(f'\n{run.label}\n', quiet)

    start = time.perf_counter()
    run.ball = enumerate_ball(graph, params.radius, params.cap)
    run.matrices = build_kernel_matrices(graph, run.ball, KERNEL_FUNCTIONS, params.workers)

    truncated = ' (truncated)' if run.ball.truncated else ''
    log(
        f'    ball radius {params.radius}: {len(run.ball)} elements{truncated}, '
        f'{(time.perf_counter() - start) * 1000:.0f} ms\n',
        quiet,
    )

    order = {name: i for i, name in enumerate(names)}

    if params.workers > 1:
        with ThreadPoolExecutor(max_workers=params.workers) as pool:
            futures = {name: pool.submit(_run_check, run, name, quiet) for name in names}
            for name, future in futures.items():
                collector.extend(future.result(), order[name])
    else:
        for name in names:
            collector.extend(_run_check(run, name, quiet), order[name])

    document = instance_document(graph, run.ball, collector.reports, suite)
    document['params'] = params.describe()

    return document


##################
# standard suite #
##################


def standard_suite():
    """The fixed instances of the standard suite

    Returns:
        list[GraphSpec]: Free and direct product degenerations, paths, cycles
                         (the square and pentagon are not chordal) and a
                         case where a vertex group is infinite but l_r stays 1
    """
    Z2, Z3, Z, F2 = CyclicGroup(2), CyclicGroup(3), IntegerGroup(), FreeGroup(2)

    return [
        edgeless_graph([Z2, Z2], 'edgeless-2'),
        edgeless_graph([Z, Z], 'edgeless-2-Z'),
        complete_graph([Z3, Z], 'edge-2'),
        path_graph([Z2, F2, Z3], 'path-3'),
        cycle_graph([Z2, Z3, Z, F2], 'square-4'),
        cycle_graph([Z2, Z3, Z, Z2, Z3], 'pentagon-5'),
        complete_graph([Z2, Z2, Z2], 'complete-3'),
        path_graph([Z2, Z2, Z], 'case-1'),
    ]


def run_standard_suite(params, quiet=False):
    """Run every standard suite instance with the same parameters

    Returns:
        dict: {'version', 'suite': 'standard', 'params', 'runs': [document]}
    """
    runs = [run_checks(graph, params, 'standard', quiet=quiet) for graph in standard_suite()]

    return {
        'version': REPORT_VERSION,
        'suite': 'standard',
        'params': params.describe(),
        'runs': runs,
    }
