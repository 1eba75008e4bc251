# config module
from config.run_config import (
    DEFAULTS,
    RunConfig,
    SuiteParams,
    emit_config,
    load_config,
    parse_config,
)

__all__ = [
    'DEFAULTS',
    'RunConfig',
    'SuiteParams',
    'emit_config',
    'load_config',
    'parse_config',
]
