"""Callbacks for the continuation solver."""
import pandas as pd
from ..base import ReprMixin
import logging
logger = logging.getLogger(__name__)


class Callback(ReprMixin):
    pass


class PassCallback(Callback):
    def __init__(self):
        self.repr_init()

    def __call__(self, state, i):
        pass


class JoinCallback(Callback):
    def __init__(self, callbacks):
        self.callbacks = callbacks
        self.repr_init(pad="\t")

    def __call__(self, state, i):
        for callback in self.callbacks:
            callback(state, i)


class LogProgress(Callback):
    def __init__(self, every=1):
        self.every = every
        self.repr_init()

    def __call__(self, state, i):
        if (i % self.every == 0):
            logger.info(
                f"step={i} s={state.s:.6f} step_size={state.step:.2e} "
                f"residual={state.residual:.2e}"
            )


class TrackPath(Callback):
    "Records the zeros along the continuation path"

    def __init__(self, every=1):
        self.every = every
        self.repr_init()
        self.records = []

    def __call__(self, state, i):
        if (i == 0):
            self.records = []
        if (i % self.every == 0):
            for idx, w in enumerate(state.moving_zeros):
                self.records.append(dict(
                    step=i, s=state.s, zero=idx, re=w.real, im=w.imag,
                    residual=state.residual
                ))

    def get_dataframe(self):
        return pd.DataFrame(self.records)
