import pytest

from dwgen.params import LowLevelParams, load_config
from dwgen.presets import PRESETS


def low(nb_dim=(2,), tot_nb_dim=None, nb_meas=None, density=None, nb_levels=None,
        nb_att=None, hhlevel_size=None, dim_sfactor=None) -> LowLevelParams:
    """Low-level parameters with uniform per-object values unless given."""
    nb_ft = len(nb_dim)
    tot = tot_nb_dim if tot_nb_dim is not None else max(nb_dim)
    nb_levels = nb_levels or (1,) * tot
    return LowLevelParams(
        nb_ft=nb_ft, nb_dim=tuple(nb_dim), tot_nb_dim=tot,
        nb_meas=tuple(nb_meas or (2,) * nb_ft), density=tuple(density or (1.0,) * nb_ft),
        nb_levels=tuple(nb_levels),
        nb_att=tuple(nb_att or tuple((2,) * n for n in nb_levels)),
        hhlevel_size=tuple(hhlevel_size or (3,) * tot),
        dim_sfactor=tuple(dim_sfactor or (2,) * tot),
    )


@pytest.fixture
def desk_config():
    return load_config(PRESETS["desk"])


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
