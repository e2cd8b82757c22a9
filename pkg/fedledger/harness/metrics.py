#
# Flat metrics rows and their CSV / JSON lines exports
#

from .ExperimentConfig import CSV, JSONL

from dataclasses import dataclass, fields, asdict
import csv
import json
import math
import logging

_logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

# Float format, 17 significant digits for exact round trips
float_fmt = '%.17g'

# Exported only on request, varies between runs
TIMING_FIELD = 'wall_time'


@dataclass(frozen=True)
class MetricsRow:
    """ One record per (experiment, round) """

    experiment: str
    seed: int
    config_digest: str
    association_mode: str
    noise_scale: float
    clip_bound: float
    participants: int  # |K|
    miner_load: str  # 'miner:count' pairs separated by ';'
    round: int
    global_loss: float
    test_loss: float
    test_accuracy: float
    total_utility: float
    rho: float
    eta: float
    objective: float
    comm_uploaded: int
    comm_downloaded: int
    comm_broadcast: int
    comm_total: int
    learning_rate: float
    wall_time: float = 0.


def field_names(include_timing=False):
    names = ['schema_version'] + [f.name for f in fields(MetricsRow)]
    if not include_timing:
        names.remove(TIMING_FIELD)
    return names


def format_miner_load(load):
    return ';'.join('%d:%d' % (s, count) for s, count in sorted(load.items()))


def rows_from_records(records, experiment, cfg, association):
    """ Metrics rows of a federation run
        @param association AssociationResult of the run
    """
    load = format_miner_load(association.miner_load(range(cfg.num_miners)))
    return [MetricsRow(experiment=experiment, seed=cfg.seed, config_digest=cfg.digest,
                       association_mode=cfg.association.mode,
                       noise_scale=cfg.privacy.noise_scale, clip_bound=cfg.privacy.clip_bound,
                       participants=len(association.participants), miner_load=load,
                       round=r.round, global_loss=r.global_loss, test_loss=r.test_loss,
                       test_accuracy=r.test_accuracy, total_utility=r.total_utility,
                       rho=cfg.sys.rho, eta=cfg.sys.eta, objective=r.objective,
                       comm_uploaded=r.comm_weights_uploaded, comm_downloaded=r.comm_weights_downloaded,
                       comm_broadcast=r.comm_weights_broadcast, comm_total=r.comm_weights_total,
                       learning_rate=r.learning_rate, wall_time=r.wall_time)
            for r in records]


def _format(value):
    if isinstance(value, float):
        return float_fmt % value
    return str(value)


def _json_value(value):
    # Non-finite floats are not valid JSON
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _record(row: MetricsRow, include_timing):
    record = dict(schema_version=SCHEMA_VERSION)
    record.update(asdict(row))
    if not include_timing:
        del record[TIMING_FIELD]
    return record


def export_metrics(rows, format_, path, include_timing=False):
    """ Write the rows in the given order, csv with a fixed versioned header or JSON lines """
    if format_ == CSV:
        with open(path, 'w', newline='') as f:
            writer = csv.DictWriter(f, fieldnames=field_names(include_timing), lineterminator='\n')
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _format(v) for k, v in _record(row, include_timing).items()})
    elif format_ == JSONL:
        with open(path, 'w') as f:
            for row in rows:
                record = {k: _json_value(v) for k, v in _record(row, include_timing).items()}
                f.write(json.dumps(record, allow_nan=False) + '\n')
    else:
        raise ValueError("Unknown metrics format '%s'" % format_)
    _logger.info('%d metrics rows written to %s', len(rows), path)


def _parse(type_, value):
    # JSON lines hold null for non-finite floats
    if value is None and type_ is float:
        return math.nan
    return type_(value)


def read_metrics(path, format_):
    """ Rows of an exported metrics file """
    types = {f.name: f.type for f in fields(MetricsRow)}
    rows = []
    with open(path, newline='') as f:
        if format_ == CSV:
            records = list(csv.DictReader(f))
        elif format_ == JSONL:
            records = [json.loads(line) for line in f if line.strip()]
        else:
            raise ValueError("Unknown metrics format '%s'" % format_)

    for record in records:
        record.pop('schema_version', None)
        rows.append(MetricsRow(**{k: _parse(types[k], v) for k, v in record.items()}))
    return rows
