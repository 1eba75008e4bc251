from concurrent.futures import ThreadPoolExecutor

from verifying.ball import enumerate_ball
from verifying.report import (
    CertReport,
    ReportCollector,
    document_passed,
    format_summary,
    instance_document,
    read_document,
    summary_table,
    write_document,
)


def _report(name, passed=True):
    return CertReport(name, 'instance', 4, 0.5, 1e-8, passed, 1.25, 42, 'detail')


def test_report_to_dict():
    assert _report('cnd[phi_gamma]').to_dict() == {
        'name': 'cnd[phi_gamma]',
        'pass': True,
        'metric': 0.5,
        'tolerance': 1e-8,
        'seed': 42,
        'ms': 1.25,
        'size': 4,
        'detail': 'detail',
    }


def test_collector_orders_by_step():
    collector = ReportCollector()

    def add(i):
        collector.extend([_report(f'step{i}a'), _report(f'step{i}b')], order=i)

    with ThreadPoolExecutor(max_workers=4) as pool:
        list(pool.map(add, reversed(range(20))))

    names = [r.name for r in collector.reports]
    assert names == [f'step{i}{x}' for i in range(20) for x in 'ab']


def test_collector_all_passed():
    collector = ReportCollector()
    collector.extend([_report('a')])
    assert collector.all_passed()

    collector.extend([_report('b', passed=False)])
    assert not collector.all_passed()


def test_instance_document(z2_edgeless):
    ball = enumerate_ball(z2_edgeless, 2)
    document = instance_document(z2_edgeless, ball, [_report('a')])

    assert document['version'] == 1
    assert document['suite'] == 'config'
    assert document['graph'] == {'name': 'edgeless', 'edges': []}
    assert document['vertex_groups'] == [{'kind': 'cyclic', 'n': 2}] * 2
    assert document['n_elements'] == 5
    assert document['truncated'] is False
    assert document_passed(document)


def test_document_passed_with_runs(z2_edgeless):
    good = instance_document(z2_edgeless, None, [_report('a')])
    bad = instance_document(z2_edgeless, None, [_report('a'), _report('b', False)])

    assert document_passed({'runs': [good, good]})
    assert not document_passed({'runs': [good, bad]})


def test_summary(z2_edgeless):
    document = instance_document(z2_edgeless, None, [_report('a'), _report('b', False)])

    df = summary_table(document)
    assert list(df.columns) == ['instance', 'check', 'pass', 'metric', 'tolerance', 'ms']
    assert len(df) == 2

    text = format_summary(document)
    assert '1 of 2 checks failed' in text


def test_write_and_read(tmp_path, z2_edgeless):
    document = instance_document(z2_edgeless, None, [_report('a')])
    path = tmp_path / 'report.json'

    write_document(document, path)

    assert read_document(path) == document
