import dataclasses
import time

import pytest
from conftest import Z, Z2
from pytest import mark

from config.run_config import SuiteParams
from product.graph import GraphSpec, path_graph
from verifying.report import document_passed
from verifying.suite import CHECKS, run_checks, run_standard_suite, standard_suite

SMALL = SuiteParams(radius=2, samples=20, t_list=(0.5, 2.0), n_list=(1, 10, 100))


def _names(document):
    return [check['name'] for check in document['checks']]


def test_run_checks_small_graph(z2_edge):
    document = run_checks(z2_edge, SMALL, quiet=True)

    assert document_passed(document), document['checks']
    assert document['n_elements'] == 4
    assert document['params']['samples'] == 20

    names = _names(document)
    assert names[0] == 'eigensolver[jacobi]'
    assert 'normal_form_oracle' in names
    assert 'degeneration' in names
    assert 'cnd[phi_gamma]' in names
    assert 'schoenberg[phi_gamma][t=0.5]' in names


def test_run_checks_is_deterministic(path3):
    first = run_checks(path3, SMALL, quiet=True)
    second = run_checks(path3, SMALL, quiet=True)

    def strip(document):
        return [(c['name'], c['pass'], c['metric']) for c in document['checks']]

    assert strip(first) == strip(second)


def test_workers_do_not_change_the_report(path3):
    serial = run_checks(path3, SMALL, quiet=True)
    threaded = run_checks(path3, dataclasses.replace(SMALL, workers=3), quiet=True)

    assert _names(serial) == _names(threaded)
    assert [c['metric'] for c in serial['checks']] == [
        c['metric'] for c in threaded['checks']
    ]


def test_mixed_graph_skips_degeneration(path3):
    names = _names(run_checks(path3, SMALL, names=['degeneration', 'vanishing'], quiet=True))

    assert names == ['vanishing']


def test_growth_check_runs_on_an_infinite_vertex():
    graph = path_graph([Z2, Z2, Z], 'case-1')

    document = run_checks(graph, SMALL, names=['length_bounded_growth'], quiet=True)

    assert _names(document) == ['length_bounded_growth']
    assert document_passed(document)


def test_failing_step_becomes_a_failed_report():
    graph = GraphSpec((Z2,), frozenset(), 'single')
    params = dataclasses.replace(SMALL, solver='jacobi', n_list=(5, 2))

    document = run_checks(graph, params, names=['pointwise_limit'], quiet=True)

    (check,) = document['checks']
    assert not check['pass']
    assert check['detail'].startswith('error:')


def test_unknown_check(z2_edge):
    with pytest.raises(ValueError):
        run_checks(z2_edge, SMALL, names=['nope'], quiet=True)


def test_standard_suite_instances():
    names = [graph.name for graph in standard_suite()]

    assert names == [
        'edgeless-2',
        'edgeless-2-Z',
        'edge-2',
        'path-3',
        'square-4',
        'pentagon-5',
        'complete-3',
        'case-1',
    ]
    assert len(CHECKS) == 16


@mark.slow
def test_standard_suite_passes():
    start = time.perf_counter()
    document = run_standard_suite(SuiteParams(radius=4), quiet=True)
    elapsed = time.perf_counter() - start

    assert document['suite'] == 'standard'
    assert len(document['runs']) == 8
    assert document_passed(document)
    assert elapsed < 300
