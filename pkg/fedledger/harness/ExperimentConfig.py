from . import ParseError, ValidationError
from ..economics import EconomicsError, utility
from ..economics.SystemParams import SystemParams
from ..matching import orientations, SELF_UTILITY
from ..privacy import PrivacyError
from ..privacy.PrivacyParams import PrivacyParams, sigma_from_budget
from ..privacy.models import available_models, LOGISTIC_REGRESSION
from ..dataset.generators import available_generators, TWO_GAUSSIANS

from dataclasses import dataclass, field
from typing import Optional, Tuple, Any
import copy
import hashlib
import json
import yaml
import logging

_logger = logging.getLogger(__name__)

# Association modes
MMA = 'mma'
RANDOM = 'random'
association_modes = (MMA, RANDOM)

# Metrics formats
CSV = 'csv'
JSONL = 'jsonl'
metrics_formats = (CSV, JSONL)

# Samples of the reference data set, partitioned equally between the MCs when not configured
REFERENCE_TRAIN_SAMPLES = 5270

DEFAULTS = {
    'name': 'experiment',
    'seed': None,
    'population': {'num_mcs': 50, 'num_miners': 5},
    'ranges': {
        'cpu_rate': [1.0e9, 2.6e9],
        'cycles_per_sample': [1.0e4, 3.0e4],
        'tx_power': [1., 10.],
        'prb_count': [1, 10],
        'sinr_db': [13., 20.],
        'local_iters': [10, 10],
    },
    'system': {
        'kappa': 1e-28,
        'phi': 1.,
        'mining_reward': 10.,
        'global_iters': 15,
        'threshold': 1440.,
        'model_bits': 3776.,
        'prb_bandwidth': 20e6,
        'rho': .5,
        'eta': .5,
        'power_unit': utility.DBW,
    },
    'privacy': {
        'noise_scale': .25,
        'epsilon': None,
        'delta': 1e-5,
        'clip_bound': 8.,
        'batch_size': 32,
        'learning_rate': .01,
        'lr_decay': False,
    },
    'association': {
        'mode': MMA,
        'orientation': SELF_UTILITY,
        'capacity': None,
        'initial_count': 1,
        'total_data': None,
    },
    'dataset': {
        'generator': TWO_GAUSSIANS,
        'samples_per_mc': None,
        'feature_dim': 20,
        'separation': 2.,
        'class_offset': 0.,
        'test_samples': 586,
    },
    'model': {'architecture': LOGISTIC_REGRESSION, 'hidden_width': 16},
    'ledger': {'difficulty': 8, 'embed_payload': True},
    'output': {'format': CSV, 'include_timing': False, 'plots': True, 'workers': 1, 'train_workers': 1},
    'sweep': None,
}

SWEEP_KEYS = ('parameter', 'values', 'seeds')

# Sweep over named sets of settings, each value a mapping of dotted paths
VARIANT = 'variant'

NUMBER = (int, float)


@dataclass(frozen=True)
class Ranges:
    """ Uniform sampling ranges of the population, [low, high] """
    cpu_rate: Tuple[float, float]
    cycles_per_sample: Tuple[float, float]
    tx_power: Tuple[float, float]
    prb_count: Tuple[int, int]
    sinr_db: Tuple[float, float]
    local_iters: Tuple[int, int]


@dataclass(frozen=True)
class AssociationConfig:
    mode: str
    orientation: str
    capacity: Optional[int]
    initial_count: int
    total_data: Optional[float]


@dataclass(frozen=True)
class DatasetConfig:
    generator: str
    samples_per_mc: int
    feature_dim: int
    separation: float
    class_offset: float
    test_samples: int


@dataclass(frozen=True)
class SweepConfig:
    parameter: str  # dotted configuration path
    values: Tuple[Any, ...]
    seeds: Tuple[int, ...]


@dataclass(frozen=True)
class ExperimentConfig:
    """ Validated experiment with defaults applied """

    name: str
    seed: int
    num_mcs: int
    num_miners: int
    ranges: Ranges
    sys: SystemParams
    power_unit: str
    privacy: PrivacyParams
    lr_decay: bool
    association: AssociationConfig
    dataset: DatasetConfig
    architecture: str
    hidden_width: int
    difficulty: int
    embed_payload: bool
    output_format: str
    include_timing: bool
    plots: bool
    workers: int  # sweep processes
    train_workers: int  # local training threads of one experiment
    sweep: Optional[SweepConfig] = None
    document: dict = field(default_factory=dict, repr=False, compare=False)  # merged document

    @property
    def digest(self):
        """ Short stable digest of the merged document, sweep excluded """
        document = {k: v for k, v in self.document.items() if k != 'sweep'}
        text = json.dumps(document, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(text.encode('utf-8')).hexdigest()[:16]

    def with_value(self, path, value):
        """ Copy of the configuration with the dotted path set to value, validated again """
        document = copy.deepcopy(self.document)
        _set_path(document, path, value)
        if path.startswith('privacy.epsilon') and value is not None:
            document['privacy']['noise_scale'] = None
        elif path.startswith('privacy.noise_scale'):
            document['privacy']['epsilon'] = None
        return from_document(document, user_keys=_flatten(document))

    def experiments(self):
        """ (label, value, config) of each sweep point and seed, the configuration itself without sweep """
        if self.sweep is None:
            return [(self.name, None, self)]

        base = self.with_value('sweep', None)
        experiments = []
        for value in self.sweep.values:
            if self.sweep.parameter == VARIANT:
                config = base
                for path, setting in value.items():
                    if path != 'name':
                        config = config.with_value(path, setting)
                value = value['name']
                label = '%s[%s]' % (self.name, value)
            else:
                config = base.with_value(self.sweep.parameter, value)
                label = '%s[%s=%s]' % (self.name, self.sweep.parameter, value)
            for seed in self.sweep.seeds:
                experiments.append((label, value, config.with_value('seed', seed)))
        return experiments


def load_config(path) -> ExperimentConfig:
    """ Read, merge with defaults and validate a YAML experiment configuration """
    try:
        with open(path) as f:
            document = yaml.safe_load(f)
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        raise ParseError(str(getattr(e, 'problem', None) or e), None if mark is None else mark.line + 1)
    except OSError as e:
        raise ParseError('Can not read %s: %s' % (path, e.strerror))

    config = parse_config(document)
    _logger.info("Configuration '%s' loaded from %s (digest %s)", config.name, path, config.digest)
    return config


def parse_config(document) -> ExperimentConfig:
    """ Validated configuration from an already parsed document """
    if document is None:
        document = {}
    if not isinstance(document, dict):
        raise ValidationError('<root>', 'configuration document must be a mapping')

    _check_keys(document, DEFAULTS, '')
    merged = _merge(DEFAULTS, document)
    return from_document(merged, user_keys=_flatten(document))


def from_document(doc, user_keys=frozenset()) -> ExperimentConfig:
    """ Typed configuration of a merged document
        @param user_keys dotted paths set by the user, used to detect conflicting privacy settings
    """
    seed = doc['seed']
    if seed is None:
        raise ValidationError('seed', 'a seed is required')
    _require(isinstance(seed, int) and not isinstance(seed, bool) and 0 <= seed < 2 ** 64,
             'seed', 'must be an integer in [0, 2^64)')

    population = doc['population']
    num_mcs = _integer(population, 'population', 'num_mcs', minimum=1)
    num_miners = _integer(population, 'population', 'num_miners', minimum=1)

    ranges = Ranges(**{key: _range(doc['ranges'], key, integer=key in ('prb_count', 'local_iters'))
                       for key in DEFAULTS['ranges']})
    _require(ranges.prb_count[0] >= 1, 'ranges.prb_count', 'PRB counts must be at least 1')
    _require(ranges.local_iters[0] >= 1, 'ranges.local_iters', 'local iterations must be at least 1')
    for key in ('cpu_rate', 'cycles_per_sample'):
        _require(getattr(ranges, key)[0] > 0, 'ranges.' + key, 'must be positive')

    system = dict(doc['system'])
    power_unit = system.pop('power_unit')
    _require(power_unit in (utility.DBW, utility.DBM), 'system.power_unit',
             "must be '%s' or '%s'" % (utility.DBW, utility.DBM))
    for key, value in system.items():
        _require(isinstance(value, NUMBER) and not isinstance(value, bool), 'system.' + key, 'must be a number')
    _integer(system, 'system', 'global_iters', minimum=1)
    try:
        sys_params = SystemParams(**system)
    except EconomicsError as e:
        raise ValidationError('system.' + getattr(e, 'field', ''), e.message)

    privacy, lr_decay = _privacy(doc['privacy'], user_keys)
    if privacy.epsilon is not None:
        doc['privacy']['noise_scale'] = None

    association = doc['association']
    _require(association['mode'] in association_modes, 'association.mode',
             'must be one of %s' % ', '.join(association_modes))
    _require(association['orientation'] in orientations, 'association.orientation',
             'must be one of %s' % ', '.join(orientations))
    capacity = association['capacity']
    if capacity is not None:
        capacity = _integer(association, 'association', 'capacity', minimum=1)
    total_data = association['total_data']
    if total_data is not None:
        _require(isinstance(total_data, NUMBER) and total_data > 0, 'association.total_data', 'must be positive')
    association_config = AssociationConfig(mode=association['mode'], orientation=association['orientation'],
                                           capacity=capacity,
                                           initial_count=_integer(association, 'association', 'initial_count',
                                                                  minimum=1),
                                           total_data=total_data)

    dataset = doc['dataset']
    _require(dataset['generator'] in available_generators, 'dataset.generator',
             'must be one of %s' % ', '.join(available_generators))
    samples_per_mc = dataset['samples_per_mc']
    if samples_per_mc is None:
        samples_per_mc = max(1, REFERENCE_TRAIN_SAMPLES // num_mcs)
    else:
        samples_per_mc = _integer(dataset, 'dataset', 'samples_per_mc', minimum=1)
    _require(isinstance(dataset['separation'], NUMBER) and dataset['separation'] >= 0, 'dataset.separation',
             'must be a non-negative number')
    _require(isinstance(dataset['class_offset'], NUMBER), 'dataset.class_offset', 'must be a number')
    dataset_config = DatasetConfig(generator=dataset['generator'], samples_per_mc=samples_per_mc,
                                   feature_dim=_integer(dataset, 'dataset', 'feature_dim', minimum=1),
                                   separation=float(dataset['separation']),
                                   class_offset=float(dataset['class_offset']),
                                   test_samples=_integer(dataset, 'dataset', 'test_samples', minimum=0))

    model = doc['model']
    _require(model['architecture'] in available_models, 'model.architecture',
             'must be one of %s' % ', '.join(available_models))

    ledger = doc['ledger']
    difficulty = _integer(ledger, 'ledger', 'difficulty', minimum=0)
    _require(difficulty <= 256, 'ledger.difficulty', 'must not exceed 256')
    _require(isinstance(ledger['embed_payload'], bool), 'ledger.embed_payload', 'must be a boolean')

    output = doc['output']
    _require(output['format'] in metrics_formats, 'output.format', 'must be one of %s' % ', '.join(metrics_formats))
    for key in ('include_timing', 'plots'):
        _require(isinstance(output[key], bool), 'output.' + key, 'must be a boolean')

    return ExperimentConfig(name=str(doc['name']), seed=seed, num_mcs=num_mcs, num_miners=num_miners,
                            ranges=ranges, sys=sys_params, power_unit=power_unit,
                            privacy=privacy, lr_decay=lr_decay,
                            association=association_config, dataset=dataset_config,
                            architecture=model['architecture'],
                            hidden_width=_integer(model, 'model', 'hidden_width', minimum=1),
                            difficulty=difficulty, embed_payload=ledger['embed_payload'],
                            output_format=output['format'], include_timing=output['include_timing'],
                            plots=output['plots'], workers=_integer(output, 'output', 'workers', minimum=1),
                            train_workers=_integer(output, 'output', 'train_workers', minimum=1),
                            sweep=_sweep(doc['sweep'], doc), document=doc)


def _privacy(section, user_keys):
    noise_scale = section['noise_scale']
    epsilon = section['epsilon']
    if epsilon is not None and 'privacy.noise_scale' in user_keys and noise_scale is not None:
        raise ValidationError('privacy', 'noise_scale and epsilon are exclusive')

    lr_decay = section['lr_decay']
    _require(isinstance(lr_decay, bool), 'privacy.lr_decay', 'must be a boolean')
    for key in ('delta', 'clip_bound', 'learning_rate'):
        _require(isinstance(section[key], NUMBER), 'privacy.' + key, 'must be a number')
    batch_size = _integer(section, 'privacy', 'batch_size', minimum=1)

    try:
        kwargs = dict(clip_bound=float(section['clip_bound']), batch_size=batch_size,
                      learning_rate=float(section['learning_rate']))
        if epsilon is not None:
            _require(isinstance(epsilon, NUMBER), 'privacy.epsilon', 'must be a number')
            privacy = PrivacyParams(noise_scale=sigma_from_budget(epsilon, section['delta']),
                                    delta=float(section['delta']), epsilon=float(epsilon), **kwargs)
        else:
            _require(isinstance(noise_scale, NUMBER), 'privacy.noise_scale', 'must be a number')
            privacy = PrivacyParams(noise_scale=float(noise_scale), delta=float(section['delta']), **kwargs)
    except PrivacyError as e:
        raise ValidationError('privacy', e.message)
    return privacy, lr_decay


def _sweep(section, doc):
    if section is None:
        return None
    _require(isinstance(section, dict), 'sweep', 'must be a mapping')
    unknown = set(section) - set(SWEEP_KEYS)
    _require(not unknown, 'sweep', 'unknown keys %s' % ', '.join(sorted(unknown)))
    _require('parameter' in section and 'values' in section, 'sweep', 'parameter and values are required')

    parameter = section['parameter']
    values = section['values']
    _require(isinstance(values, list) and len(values) > 0, 'sweep.values', 'must be a non-empty list')
    if parameter == VARIANT:
        for variant in values:
            _require(isinstance(variant, dict) and 'name' in variant, 'sweep.values', 'variants need a name')
            for path in variant:
                _require(path == 'name' or (path != 'seed' and _has_path(doc, path)), 'sweep.values',
                         "unknown configuration path '%s'" % path)
    else:
        _require(isinstance(parameter, str) and parameter != 'seed' and _has_path(doc, parameter),
                 'sweep.parameter', "unknown configuration path '%s'" % parameter)
    seeds = section.get('seeds') or [doc['seed']]
    _require(isinstance(seeds, list) and all(isinstance(s, int) and s >= 0 for s in seeds), 'sweep.seeds',
             'must be a list of non-negative integers')
    return SweepConfig(parameter=parameter, values=tuple(values), seeds=tuple(seeds))


def _require(condition, field_, message):
    if not condition:
        raise ValidationError(field_, message)


def _integer(section, section_name, key, minimum=None):
    value = section[key]
    path = '%s.%s' % (section_name, key)
    _require(isinstance(value, int) and not isinstance(value, bool), path, 'must be an integer')
    if minimum is not None:
        _require(value >= minimum, path, 'must be at least %d' % minimum)
    return value


def _range(section, key, integer=False):
    value = section[key]
    path = 'ranges.' + key
    _require(isinstance(value, (list, tuple)) and len(value) == 2, path, 'must be a [low, high] pair')
    kind = int if integer else NUMBER
    _require(all(isinstance(v, kind) and not isinstance(v, bool) for v in value), path,
             'bounds must be %s' % ('integers' if integer else 'numbers'))
    _require(value[0] <= value[1], path, 'empty range [%s, %s]' % tuple(value))
    return tuple(value) if integer else (float(value[0]), float(value[1]))


def _check_keys(document, defaults, prefix):
    """ Reject keys absent from the defaults """
    for key, value in document.items():
        path = prefix + str(key)
        if key not in defaults:
            raise ValidationError(path, 'unknown configuration key')
        if isinstance(defaults[key], dict) and key != 'ranges':
            _require(isinstance(value, dict), path, 'must be a mapping')
            _check_keys(value, defaults[key], path + '.')
        elif key == 'ranges':
            _require(isinstance(value, dict), path, 'must be a mapping')
            for range_key in value:
                _require(range_key in defaults[key], path + '.' + str(range_key), 'unknown configuration key')


def _merge(defaults, document):
    merged = copy.deepcopy(defaults)
    for key, value in document.items():
        if isinstance(merged.get(key), dict) and isinstance(value, dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def _flatten(document, prefix=''):
    """ Dotted paths of the leaves of a document """
    keys = set()
    for key, value in document.items():
        path = prefix + str(key)
        if isinstance(value, dict) and key != 'sweep':
            keys |= _flatten(value, path + '.')
        elif value is not None:
            keys.add(path)
    return frozenset(keys)


def _has_path(document, path):
    node = document
    for key in path.split('.'):
        if not isinstance(node, dict) or key not in node:
            return False
        node = node[key]
    return True


def _set_path(document, path, value):
    keys = path.split('.')
    node = document
    for key in keys[:-1]:
        node = node[key]
    node[keys[-1]] = value
