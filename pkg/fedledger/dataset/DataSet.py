import numpy as np


class DataSet:
    """ Labelled samples held by one party: features x (samples x dim) and binary labels y """

    def __init__(self, x=None, y=None, name=''):
        self.name = name
        self.x = np.empty((0, 0)) if x is None else np.asarray(x, dtype=np.float64)
        self.y = np.empty(0) if y is None else np.asarray(y, dtype=np.float64)
        assert len(self.x) == len(self.y), 'Got %d samples and %d labels' % (len(self.x), len(self.y))

    def __len__(self):
        return len(self.y)

    @property
    def feature_dim(self):
        return self.x.shape[1] if self.x.ndim == 2 else 0

    def batch(self, indexes):
        """ Sub data set at the given indexes """
        return DataSet(self.x[indexes], self.y[indexes], self.name)
