from plotly.colors import qualitative


class Theme:
    """ Manage the figures theme """

    def __init__(self):
        self.plotly = 'plotly_white'
        self.trace_colors = qualitative.D3
        self.figure_margins = dict(l=60, r=20, b=50, t=60)  # noqa: E741
        self.line_width = 2

    def trace_color(self, index):
        """ Color of the index-th trace, cycling over the palette """
        return self.trace_colors[index % len(self.trace_colors)]

    def layout(self, title, x_title, y_title):
        """ Common layout arguments of the experiment figures """
        return dict(margin=self.figure_margins,
                    title=dict(text=title, font=dict(size=14)),
                    xaxis_title_text=x_title,
                    yaxis_title_text=y_title,
                    template=self.plotly)
