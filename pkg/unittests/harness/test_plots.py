from fedledger.harness.experiment import run_experiment, SweepSummary
from fedledger.harness.plots import round_figure, wall_time_figure, write_figures, ROUND_FIGURES

from harness_configs import small_config
import os


def test_round_figure_one_trace_per_variant():
    results = [run_experiment(small_config(seed=seed), label='mma') for seed in (1, 2)]
    results.append(run_experiment(small_config(association={'mode': 'random'}), label='random'))

    fig = round_figure(results, 'objective', 'F', 'F')

    assert [trace.name for trace in fig.data] == ['mma', 'random']
    assert list(fig.data[0].x) == [1, 2, 3]
    assert fig.data[0].y[-1] == (results[0].final.objective + results[1].final.objective) / 2


def test_wall_time_figure():
    summaries = [SweepSummary(value=n, seeds=1, objective=0., global_loss=0., test_accuracy=0., wall_time=n / 10.)
                 for n in (10, 20)]

    fig = wall_time_figure(summaries, 'population.num_mcs')

    assert list(fig.data[0].x) == [10, 20]
    assert list(fig.data[0].y) == [1., 2.]


def test_write_figures(tmp_path):
    result = run_experiment(small_config())

    paths = write_figures([result], str(tmp_path), 'run')

    assert len(paths) == len(ROUND_FIGURES)
    assert all(os.path.isfile(path) for path in paths)
    assert os.path.basename(paths[0]) == 'run_objective.html'


def test_write_population_figures(tmp_path):
    result = run_experiment(small_config())
    summaries = [SweepSummary(value=4, seeds=1, objective=0., global_loss=0., test_accuracy=0., wall_time=1.)]

    paths = write_figures([result], str(tmp_path), 'sweep', summaries, 'population.num_mcs')

    assert os.path.basename(paths[-1]) == 'sweep_wall_time.html'
    assert len(paths) == len(ROUND_FIGURES) + 1
