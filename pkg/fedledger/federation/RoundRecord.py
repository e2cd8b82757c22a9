from dataclasses import dataclass
import numpy as np


@dataclass(frozen=True)
class RoundRecord:
    """ State of the federation after one global iteration, communication counted since round 1 """

    round: int
    global_weights: np.ndarray  # W^(t+1)
    global_loss: float  # J (nats)
    test_loss: float
    test_accuracy: float
    total_utility: float  # U
    objective: float  # F = rho U - eta J
    comm_weights_uploaded: int
    comm_weights_downloaded: int
    comm_weights_broadcast: int
    learning_rate: float
    wall_time: float = 0.  # seconds

    @property
    def comm_weights_total(self):
        return self.comm_weights_uploaded + self.comm_weights_downloaded + self.comm_weights_broadcast
