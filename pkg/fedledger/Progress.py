

class Progress:
    """ Manage sweep steps: one status and message per finished experiment """

    # Statuses
    NONE = 0
    INFO = 1
    WARN = 2
    ERROR = 3

    def __init__(self, num_steps: int = None):
        self.num_steps = num_steps
        self.statuses = []
        self.current_step = 0

    def reset(self, num_steps=None):
        self.statuses = []
        self.current_step = 0
        if num_steps is not None:
            self.num_steps = num_steps

    def forward(self, step_delta=1, status=NONE, status_msg=""):
        self.current_step += step_delta
        self.statuses.append((self.current_step, status, status_msg))

    def get_status(self):
        if self.statuses:
            return self.statuses[-1]
        return 0, Progress.NONE, ""

    @property
    def percent(self):
        if not self.num_steps:
            return 0.
        return 100. * self.current_step / self.num_steps

    def count(self, status):
        return sum(1 for _, s, _ in self.statuses if s == status)

    def worst_status(self):
        return max((s for _, s, _ in self.statuses), default=Progress.NONE)
