from fedledger.harness.metrics import MetricsRow, SCHEMA_VERSION, field_names, format_miner_load, export_metrics, \
    read_metrics

import json
import math
import pytest


def make_row(round_, **kwargs):
    values = dict(experiment='exp', seed=3, config_digest='0123456789abcdef', association_mode='mma',
                  noise_scale=.25, clip_bound=8., participants=4, miner_load='0:2;1:2', round=round_,
                  global_loss=.6931471805599453 / round_, test_loss=.7, test_accuracy=.5 + .01 * round_,
                  total_utility=123.456, rho=.5, eta=.5, objective=0., comm_uploaded=40 * round_,
                  comm_downloaded=160 * round_, comm_broadcast=40 * round_, comm_total=240 * round_,
                  learning_rate=.01, wall_time=.125)
    values.update(kwargs)
    values['objective'] = values['rho'] * values['total_utility'] - values['eta'] * values['global_loss']
    return MetricsRow(**values)


def test_field_names():
    names = field_names()

    assert names[0] == 'schema_version'
    assert 'wall_time' not in names
    assert field_names(include_timing=True)[-1] == 'wall_time'


def test_format_miner_load():
    assert format_miner_load({2: 1, 0: 3, 1: 0}) == '0:3;1:0;2:1'
    assert format_miner_load({}) == ''


def test_empty_csv_is_header_only(tmp_path):
    path = tmp_path / 'empty.csv'

    export_metrics([], 'csv', str(path))

    assert path.read_text() == ','.join(field_names()) + '\n'
    assert read_metrics(str(path), 'csv') == []


def test_empty_jsonl(tmp_path):
    path = tmp_path / 'empty.jsonl'

    export_metrics([], 'jsonl', str(path))

    assert path.read_text() == ''


@pytest.mark.parametrize('format_', ['csv', 'jsonl'])
def test_read_back(tmp_path, format_):
    rows = [make_row(r) for r in range(1, 4)]
    path = tmp_path / ('metrics.' + format_)

    export_metrics(rows, format_, str(path), include_timing=True)

    assert read_metrics(str(path), format_) == rows


def test_timing_excluded(tmp_path):
    path = tmp_path / 'metrics.jsonl'

    export_metrics([make_row(1)], 'jsonl', str(path))
    record = json.loads(path.read_text())

    assert 'wall_time' not in record
    assert record['schema_version'] == SCHEMA_VERSION
    assert read_metrics(str(path), 'jsonl')[0].wall_time == 0.


def test_csv_rows_in_order(tmp_path):
    rows = [make_row(r) for r in (1, 2, 3)]
    path = tmp_path / 'metrics.csv'

    export_metrics(rows, 'csv', str(path))
    lines = path.read_text().splitlines()

    assert len(lines) == 4
    assert [line.split(',')[field_names().index('round')] for line in lines[1:]] == ['1', '2', '3']


def test_missing_test_metrics(tmp_path):
    path = tmp_path / 'metrics.csv'

    export_metrics([make_row(1, test_loss=float('nan'), test_accuracy=float('nan'))], 'csv', str(path))
    row = read_metrics(str(path), 'csv')[0]

    assert math.isnan(row.test_loss) and math.isnan(row.test_accuracy)


def test_missing_test_metrics_jsonl_is_strict_json(tmp_path):
    path = tmp_path / 'metrics.jsonl'

    export_metrics([make_row(1, test_loss=float('nan'), test_accuracy=float('inf'))], 'jsonl', str(path))
    line = path.read_text().splitlines()[0]

    def reject(constant):
        raise ValueError('Non-standard JSON constant %s' % constant)

    record = json.loads(line, parse_constant=reject)
    assert record['test_loss'] is None and record['test_accuracy'] is None
    assert 'NaN' not in line

    row = read_metrics(str(path), 'jsonl')[0]
    assert math.isnan(row.test_loss) and math.isnan(row.test_accuracy)
    assert row.global_loss == make_row(1).global_loss


def test_objective_recomputes(tmp_path):
    path = tmp_path / 'metrics.csv'
    export_metrics([make_row(r, rho=.3, eta=.7) for r in (1, 2)], 'csv', str(path))

    for row in read_metrics(str(path), 'csv'):
        assert row.objective == row.rho * row.total_utility - row.eta * row.global_loss


def test_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        export_metrics([], 'xml', str(tmp_path / 'metrics.xml'))
