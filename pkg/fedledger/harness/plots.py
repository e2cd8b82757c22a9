#
# Plot-ready experiment figures, written as standalone HTML
#

from ..theming.Theme import Theme

import plotly.graph_objects as go
import numpy as np
import os
import logging

_logger = logging.getLogger(__name__)

# Per-round figures: (row attribute, title, axis title)
ROUND_FIGURES = [
    ('objective', 'Weighted objective F per global iteration', 'F'),
    ('global_loss', 'Global loss J per global iteration', 'J (nats)'),
    ('test_accuracy', 'Test accuracy per global iteration', 'Accuracy'),
]


def round_figure(results, attribute, title, y_title, theme: Theme = None):
    """ One trace per experiment variant, averaged over its seeds, of a per-round metric """
    theme = theme or Theme()
    fig = go.Figure()

    variants = []
    for result in results:
        if result.label not in variants:
            variants.append(result.label)

    for i, label in enumerate(variants):
        runs = [[getattr(row, attribute) for row in r.rows] for r in results if r.label == label and r.rows]
        if not runs:
            continue
        length = min(len(run) for run in runs)
        values = np.mean([run[:length] for run in runs], axis=0)
        fig.add_trace(go.Scatter(x=list(range(1, length + 1)), y=values, mode='lines+markers', name=label,
                                 line=dict(color=theme.trace_color(i), width=theme.line_width)))

    fig.update_layout(**theme.layout(title, 'Global iteration', y_title))
    return fig


def wall_time_figure(summaries, x_title, theme: Theme = None):
    """ Mean experiment wall time against the swept value """
    theme = theme or Theme()
    fig = go.Figure(data=[go.Scatter(x=[s.value for s in summaries], y=[s.wall_time for s in summaries],
                                     mode='lines+markers', line=dict(color=theme.trace_color(0),
                                                                     width=theme.line_width))])
    fig.update_layout(**theme.layout('Computation time', x_title, 'Wall time (s)'))
    return fig


def write_figures(results, directory, prefix, summaries=None, sweep_parameter=None):
    """ Write the per-round figures, and the wall time figure of population sweeps, as HTML
        @return paths of the written files
    """
    theme = Theme()
    paths = []
    for attribute, title, y_title in ROUND_FIGURES:
        path = os.path.join(directory, '%s_%s.html' % (prefix, attribute))
        round_figure(results, attribute, title, y_title, theme).write_html(path, include_plotlyjs='cdn')
        paths.append(path)

    if summaries and sweep_parameter is not None and sweep_parameter.startswith('population.'):
        path = os.path.join(directory, '%s_wall_time.html' % prefix)
        wall_time_figure(summaries, sweep_parameter, theme).write_html(path, include_plotlyjs='cdn')
        paths.append(path)

    _logger.info('Figures written: %s', ', '.join(paths))
    return paths
