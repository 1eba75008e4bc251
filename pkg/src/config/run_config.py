"""Run configuration

Config Schema (version 1)
-------------------------
{
    "version": 1,
    "name": "square-4",                      (optional graph display name)
    "vertices": [
        {"id": 0, "group": {"kind": "cyclic", "n": 2}},
        {"id": 1, "group": {"kind": "integers"}},
        {"id": 2, "group": {"kind": "free", "rank": 2}}
    ],
    "edges": [[0, 1], [1, 2]],
    "suite": {                               (optional, every key optional)
        "radius": 3,       ball radius (int > 0)
        "cap": 300,        ball element cap (int > 0)
        "tol": 1e-8,       relative eigenvalue tolerance (>= 0, 0 is strict)
        "t_list": [...],   Schoenberg scales (each > 0)
        "n_list": [...],   pointwise-limit indices (each > 0, increasing)
        "samples": 200,    random samples per property check (int > 0)
        "seed": 42,        PRNG seed (int >= 0)
        "workers": 1,      threads for kernel matrices (int > 0)
        "solver": "jacobi" eigensolver, 'jacobi' or 'numpy'
    },
    "output": "report.json"                  (optional report path)
}

Unknown keys are rejected at every level and all errors are reported
together.
"""

import json
from dataclasses import asdict, dataclass, field

from errors import ConfigError, DomainError
from groups.vertex_group import GROUP_KINDS, make_group
from product.graph import GraphSpec
from verifying.eigen import SOLVERS

CONFIG_VERSION = 1

# all defaults, echoed in --help and in every report
DEFAULTS = {
    'radius': 3,
    'cap': 300,
    'tol': 1e-8,
    't_list': (0.1, 0.5, 1.0, 2.0, 5.0),
    'n_list': (1, 2, 5, 10, 100),
    'samples': 200,
    'seed': 42,
    'workers': 1,
    'solver': 'jacobi',
}

TOP_KEYS = {'version', 'name', 'vertices', 'edges', 'suite', 'output'}
VERTEX_KEYS = {'id', 'group'}


@dataclass(frozen=True)
class SuiteParams:
    radius: int = DEFAULTS['radius']
    cap: int = DEFAULTS['cap']
    tol: float = DEFAULTS['tol']
    t_list: tuple = DEFAULTS['t_list']
    n_list: tuple = DEFAULTS['n_list']
    samples: int = DEFAULTS['samples']
    seed: int = DEFAULTS['seed']
    workers: int = DEFAULTS['workers']
    solver: str = DEFAULTS['solver']

    def describe(self):
        result = asdict(self)
        result['t_list'] = list(self.t_list)
        result['n_list'] = list(self.n_list)

        return result


@dataclass(frozen=True)
class RunConfig:
    graph: GraphSpec
    suite: SuiteParams = field(default_factory=SuiteParams)
    output: str = None
    version: int = CONFIG_VERSION


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _parse_group(spec, where, errors):
    if not isinstance(spec, dict):
        errors.append(f'{where}: group must be an object')
        return None

    kind = spec.get('kind')
    if kind not in GROUP_KINDS:
        errors.append(f'{where}: unknown group kind {kind!r}')
        return None

    _, size_key = GROUP_KINDS[kind]
    allowed = {'kind'} | ({size_key} if size_key else set())

    for key in sorted(set(spec) - allowed):
        errors.append(f'{where}: unknown key {key!r}')

    if size_key and not _is_int(spec.get(size_key)):
        errors.append(f"{where}: group kind '{kind}' needs integer '{size_key}'")
        return None

    try:
        return make_group(spec)
    except DomainError as error:
        errors.append(f'{where}: {str(error).removeprefix("Error: ")}')
        return None


def _parse_suite(spec, errors):
    if spec is None:
        return SuiteParams()

    if not isinstance(spec, dict):
        errors.append('suite: must be an object')
        return SuiteParams()

    for key in sorted(set(spec) - set(DEFAULTS)):
        errors.append(f'suite: unknown key {key!r}')

    values = dict(DEFAULTS)

    for key in ('radius', 'cap', 'samples', 'workers'):
        if key in spec:
            if not _is_int(spec[key]) or spec[key] <= 0:
                errors.append(f'suite.{key}: must be a positive integer')
            else:
                values[key] = spec[key]

    if 'seed' in spec:
        if not _is_int(spec['seed']) or spec['seed'] < 0:
            errors.append('suite.seed: must be a non-negative integer')
        else:
            values['seed'] = spec['seed']

    if 'tol' in spec:
        if not _is_number(spec['tol']) or spec['tol'] < 0:
            errors.append('suite.tol: must be a non-negative number')
        else:
            values['tol'] = float(spec['tol'])

    for key in ('t_list', 'n_list'):
        if key in spec:
            items = spec[key]
            if (
                not isinstance(items, list)
                or not items
                or not all(_is_number(x) and x > 0 for x in items)
            ):
                errors.append(f'suite.{key}: must be a non-empty list of positive numbers')
            else:
                values[key] = tuple(items) if key == 'n_list' else tuple(map(float, items))

    if any(a >= b for a, b in zip(values['n_list'], values['n_list'][1:])):
        errors.append('suite.n_list: must be increasing')

    if 'solver' in spec:
        if spec['solver'] not in SOLVERS:
            errors.append(f'suite.solver: must be one of {", ".join(SOLVERS)}')
        else:
            values['solver'] = spec['solver']

    return SuiteParams(**values)


def parse_config(text):
    """Parse and validate a JSON run configuration

    Args:
        text (str): Config text in the documented schema

    Returns:
        RunConfig: Validated configuration

    Raises:
        ConfigError: With every validation error found
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigError([f'malformed JSON: {error}']) from None

    if not isinstance(data, dict):
        raise ConfigError(['config must be a JSON object'])

    errors = []

    for key in sorted(set(data) - TOP_KEYS):
        errors.append(f'unknown key {key!r}')

    if data.get('version', CONFIG_VERSION) != CONFIG_VERSION:
        errors.append(f'version: unsupported version {data.get("version")!r}')

    # vertices
    vertices = data.get('vertices')
    groups = {}

    if not isinstance(vertices, list) or not vertices:
        errors.append('vertices: must be a non-empty list')
        vertices = []

    for i, vertex in enumerate(vertices):
        where = f'vertices[{i}]'

        if not isinstance(vertex, dict):
            errors.append(f'{where}: must be an object')
            continue

        for key in sorted(set(vertex) - VERTEX_KEYS):
            errors.append(f'{where}: unknown key {key!r}')

        vid = vertex.get('id', i)
        if not _is_int(vid):
            errors.append(f'{where}: id must be an integer')
            continue
        if vid in groups:
            errors.append(f'{where}: duplicate vertex id {vid}')
            continue

        groups[vid] = _parse_group(vertex.get('group'), where, errors)

    if groups and sorted(groups) != list(range(len(groups))):
        errors.append(f'vertices: ids must be 0..{len(groups) - 1}')

    # edges
    edges = data.get('edges', [])
    seen = set()

    if not isinstance(edges, list):
        errors.append('edges: must be a list')
        edges = []

    for i, edge in enumerate(edges):
        where = f'edges[{i}]'

        if not (isinstance(edge, list) and len(edge) == 2 and all(map(_is_int, edge))):
            errors.append(f'{where}: must be a pair of vertex ids')
            continue

        v, w = edge

        if v == w:
            errors.append(f'{where}: loop edge [{v}, {w}]')
            continue

        for u in (v, w):
            if u not in groups:
                errors.append(f'{where}: unknown vertex {u}')

        key = frozenset(edge)
        if key in seen:
            errors.append(f'{where}: duplicate edge [{v}, {w}]')
        seen.add(key)

    suite = _parse_suite(data.get('suite'), errors)

    name = data.get('name', '')
    if not isinstance(name, str):
        errors.append('name: must be a string')

    output = data.get('output')
    if output is not None and not isinstance(output, str):
        errors.append('output: must be a string path')

    if errors:
        raise ConfigError(errors)

    graph = GraphSpec(
        tuple(groups[v] for v in range(len(groups))),
        frozenset(tuple(edge) for edge in edges),
        name,
    )

    return RunConfig(graph, suite, output)


def load_config(path):
    """Read and parse a config file

    Raises:
        OSError: If the file cannot be read
        ConfigError: If it does not validate
    """
    with open(path, encoding='utf-8') as f:
        return parse_config(f.read())


def emit_config(config):
    """Config text that parse_config maps back to an equal RunConfig"""
    graph = config.graph

    data = {'version': config.version}

    if graph.name:
        data['name'] = graph.name

    data['vertices'] = [
        {'id': v, 'group': group.describe()} for v, group in enumerate(graph.groups)
    ]
    data['edges'] = sorted([list(edge) for edge in graph.edges])
    data['suite'] = config.suite.describe()

    if config.output is not None:
        data['output'] = config.output

    return json.dumps(data, indent=2)
