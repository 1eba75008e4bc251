"""Certification reports

A CertReport records one check on one instance. Reports produced by worker
threads go through a ReportCollector.
"""

import json
import threading
from dataclasses import dataclass

import pandas as pd

from utils.ansiColors import Colors, paint
from utils.ass import status_mark

REPORT_VERSION = 1


@dataclass(frozen=True)
class CertReport:
    """Result of one certification check

    Args:
        name (str): Check name, e.g. 'cnd[phi_gamma]'
        instance (str): Instance description
        size (int): Matrix size or number of samples
        metric (float): The relevant extreme value (eigenvalue, worst error, ...)
        tolerance (float): Bound the metric was compared with
        passed (bool): True iff the stated bound holds
        ms (float): Wall time in milliseconds
        seed (int): PRNG seed, None for deterministic checks
        detail (str): Short note on what was checked
    """

    name: str
    instance: str
    size: int
    metric: float
    tolerance: float
    passed: bool
    ms: float = 0.0
    seed: int = None
    detail: str = ''

    def to_dict(self):
        return {
            'name': self.name,
            'pass': bool(self.passed),
            'metric': float(self.metric),
            'tolerance': float(self.tolerance),
            'seed': self.seed,
            'ms': round(float(self.ms), 3),
            'size': int(self.size),
            'detail': self.detail,
        }


class ReportCollector:
    """Thread-safe list of reports

    Reports are returned ordered by the `order` they were added with, then
    by insertion, so a run gives the same document however its worker
    threads interleave.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._reports = []

    def extend(self, reports, order=0):
        with self._lock:
            for report in reports:
                self._reports.append((order, len(self._reports), report))

    @property
    def reports(self):
        with self._lock:
            return [report for _, _, report in sorted(self._reports, key=lambda x: x[:2])]

    def all_passed(self):
        return all(r.passed for r in self.reports)


def instance_document(graph, ball, reports, suite='config'):
    """One run's report document

    Returns:
        dict: {version, suite, graph, vertex_groups, radius, n_elements,
               truncated, checks}
    """
    return {
        'version': REPORT_VERSION,
        'suite': suite,
        'graph': {
            'name': graph.name,
            'edges': sorted([list(edge) for edge in graph.edges]),
        },
        'vertex_groups': [g.describe() for g in graph.groups],
        'radius': ball.radius if ball is not None else 0,
        'n_elements': len(ball) if ball is not None else 0,
        'truncated': bool(ball.truncated) if ball is not None else False,
        'checks': [r.to_dict() for r in reports],
    }


def document_passed(document):
    """True iff every check of a document (or of all its runs) passed"""
    if 'runs' in document:
        return all(document_passed(run) for run in document['runs'])

    return all(check['pass'] for check in document['checks'])


def write_document(document, path):
    """Write a report document as JSON

    Raises:
        OSError: If the file cannot be written
    """
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(document, f, indent=2)


def read_document(path):
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def summary_table(document):
    """Flatten a report document to a DataFrame, one row per check

    Returns:
        pd.DataFrame: columns ['instance', 'check', 'pass', 'metric', 'tolerance', 'ms']
    """
    runs = document['runs'] if 'runs' in document else [document]

    rows = []
    for run in runs:
        instance = run['graph']['name'] or 'graph'
        for check in run['checks']:
            rows.append(
                (
                    instance,
                    check['name'],
                    check['pass'],
                    check['metric'],
                    check['tolerance'],
                    check['ms'],
                )
            )

    return pd.DataFrame(
        rows, columns=['instance', 'check', 'pass', 'metric', 'tolerance', 'ms']
    )


def format_summary(document):
    """Plain text summary table with coloured pass/fail marks"""
    df = summary_table(document)

    if df.empty:
        return 'No checks were run'

    failed = int((~df['pass'].astype(bool)).sum())
    total = len(df)

    df['pass'] = df['pass'].map(status_mark)

    if failed:
        footer = paint(f'{failed} of {total} checks failed', Colors.FAIL)
    else:
        footer = paint(f'All {total} checks passed', Colors.SUCCESS)

    return df.to_string(index=False) + '\n\n' + footer


def dumps(document):
    return json.dumps(document, indent=2)
