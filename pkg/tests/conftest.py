import numpy as np
import pytest

from phaseswitch.experiments.presets import PRESETS


@pytest.fixture
def rng():
    return np.random.default_rng(20240417)


@pytest.fixture
def fig2a():
    return PRESETS['fig2a'].params


@pytest.fixture
def fig2b():
    return PRESETS['fig2b'].params


@pytest.fixture
def fig2c():
    return PRESETS['fig2c'].params


@pytest.fixture
def fig4():
    return PRESETS['fig4'].params


@pytest.fixture
def fig5():
    return PRESETS['fig5-square'].params
