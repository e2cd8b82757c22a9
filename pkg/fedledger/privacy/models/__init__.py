from .LogisticRegression import LogisticRegression
from .TwoLayerPerceptron import TwoLayerPerceptron

import numpy as np

LOGISTIC_REGRESSION = LogisticRegression.architecture
TWO_LAYER_MLP = TwoLayerPerceptron.architecture

available_models = {LOGISTIC_REGRESSION: 'Logistic regression',
                    TWO_LAYER_MLP: 'Two-layer perceptron (tanh hidden layer)'}

builders = {
    LOGISTIC_REGRESSION: LogisticRegression,
    TWO_LAYER_MLP: TwoLayerPerceptron
}


def get_model_builder(architecture):
    """ Factory for the models """

    if architecture in builders.keys():
        return builders[architecture]

    return None


def create_model(architecture, input_dim, rng: np.random.Generator, hidden_width=16):
    """ Shared initial model of the given architecture """
    builder = get_model_builder(architecture)
    if builder is None:
        raise ValueError("Unknown architecture '%s'" % architecture)

    if builder is TwoLayerPerceptron:
        template = TwoLayerPerceptron(input_dim, hidden_width=hidden_width)
    else:
        template = builder(input_dim)
    return template.with_weights(template.initial_weights(rng))
