import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from dwgen.params import (
    DEFAULT_MAX_ROWS,
    ConfigError,
    HighLevelParams,
    LowLevelParams,
    WorkloadParams,
    derive_low_level,
    load_config,
    nominal_low_level,
    parse_config_text,
    validate,
)
from dwgen.randomness import DEFAULT_SEED, RandomStream

# Frozen from oracle.derive_low_level(HighLevelParams(), SplitMix64(42, 0.2))
SEED42_LOW = LowLevelParams(
    nb_ft=1, nb_dim=(5,), tot_nb_dim=5, nb_meas=(5,), density=(0.5195554241349468,),
    nb_levels=(3, 2, 3, 3, 2),
    nb_att=((5, 5, 7), (4, 6), (6, 6, 5), (5, 5, 5), (6, 4)),
    hhlevel_size=(8, 10, 8, 11, 14), dim_sfactor=(11, 11, 10, 12, 12),
)


def _as_oracle_dict(p: LowLevelParams) -> dict:
    d = dataclasses.asdict(p)
    return {k: [list(r) for r in v] if k == "nb_att" else (list(v) if isinstance(v, tuple) else v)
            for k, v in d.items()}


def test_empty_document_gives_table_defaults():
    c = load_config("")
    h = c.params
    assert (h.avg_nb_ft, h.avg_nb_dim, h.avg_tot_nb_dim, h.avg_nb_meas, h.avg_density,
            h.avg_nb_levels, h.avg_nb_att, h.avg_hhlevel_size, h.dim_sfactor) == \
        (1, 5, 5, 5, 0.6, 3, 5, 10, 10)
    w = c.workload
    assert (w.nb_q, w.avg_nb_att_q, w.avg_nb_restr, w.prob_olap, w.avg_nb_aggreg,
            w.prob_cube, w.prob_having, w.avg_nb_dd) == (100, 5, 3, 0.9, 3, 0.3, 0.2, 3)
    assert c.seed == DEFAULT_SEED and load_config(None).seed == DEFAULT_SEED
    assert c.max_rows == DEFAULT_MAX_ROWS


def test_setting_default_value_is_identity():
    assert load_config("avg_density = 0.6") == load_config("")


def test_density_out_of_range():
    with pytest.raises(ConfigError, match=r"density out of \(0,1\]"):
        load_config("avg_density = 1.5")


@pytest.mark.parametrize("text, line, key", [
    ("seed = 1\nbogus = 3", 2, "bogus"),
    ("# c\n\nnb_q = ten", 3, "nb_q"),
    ("nb_q = 5\nnb_q = 6", 2, "nb_q"),
    ("avg_nb_dim 5", 1, None),
    ("generator = mt19937", 1, "generator"),
])
def test_parse_errors_name_line_and_key(text, line, key):
    with pytest.raises(ConfigError) as err:
        load_config(text)
    assert err.value.line == line and err.value.key == key
    assert str(err.value).startswith(f"line {line}")


def test_overrides_take_precedence():
    c = load_config("seed = 5\nnb_q = 7", {"seed": 9, "max_rows": None})
    assert c.seed == 9 and c.workload.nb_q == 7 and c.max_rows == DEFAULT_MAX_ROWS


def test_derived_probabilities_not_configurable():
    w = WorkloadParams(prob_olap=0.75, prob_cube=0.4)
    assert w.prob_extract == pytest.approx(0.25) and w.prob_rollup == pytest.approx(0.6)
    with pytest.raises(ConfigError):
        load_config("prob_extract = 0.1")


def test_low_level_mode_round_trips_through_text():
    text = SEED42_LOW.to_text()
    c = load_config(text)
    assert c.params == SEED42_LOW
    assert c.params.digest() == SEED42_LOW.digest()


def test_low_level_mode_rejects_mixing_and_missing():
    with pytest.raises(ConfigError, match="cannot mix"):
        load_config(SEED42_LOW.to_text() + "avg_nb_ft = 2\n")
    with pytest.raises(ConfigError, match="needs"):
        load_config("nb_ft = 1\nnb_dim = 2")


def test_scalar_dim_sfactor_stays_high_level():
    c = load_config("dim_sfactor = 3")
    assert isinstance(c.params, HighLevelParams) and c.params.dim_sfactor == 3


def test_derive_sigma_zero_is_identity_on_means():
    p = derive_low_level(HighLevelParams(sigma_fraction=0.0), RandomStream(123))
    assert p.nb_ft == 1 and p.nb_dim == (5,) and p.tot_nb_dim == 5
    assert p.nb_meas == (5,) and p.density == (0.6,)
    assert p.nb_levels == (3,) * 5 and p.nb_att == ((5, 5, 5),) * 5
    assert p.hhlevel_size == (10,) * 5 and p.dim_sfactor == (10,) * 5
    assert validate(p) == []
    assert nominal_low_level(HighLevelParams()) == p


def test_derive_single_level():
    p = derive_low_level(HighLevelParams(avg_nb_levels=1, sigma_fraction=0.0), RandomStream(1))
    assert set(p.nb_levels) == {1}


def test_derive_seed42_matches_oracle_replay():
    p = derive_low_level(HighLevelParams(), RandomStream(42))
    assert p == SEED42_LOW
    replay = oracle.derive_low_level(dataclasses.asdict(HighLevelParams()), oracle.SplitMix64(42))
    assert replay == _as_oracle_dict(SEED42_LOW)


def test_validate_violations():
    bad = dataclasses.replace(SEED42_LOW, tot_nb_dim=10)
    assert any("tot_nb_dim = 10 exceeds sum of nb_dim = 5" in v for v in validate(bad))
    zero = dataclasses.replace(SEED42_LOW, density=(0,))
    assert any("density out of (0,1]" in v for v in validate(zero))
    assert validate(SEED42_LOW) == []


def test_validate_nb_dim_above_total():
    p = dataclasses.replace(SEED42_LOW, nb_dim=(6,))
    assert validate(p)


def test_parse_nb_att_rows():
    assert parse_config_text("nb_att = 1,2; 3")["nb_att"] == ((1, 2), (3,))


high_params = st.builds(
    HighLevelParams,
    avg_nb_ft=st.integers(1, 4), avg_nb_dim=st.integers(1, 6),
    avg_tot_nb_dim=st.integers(1, 10), avg_nb_meas=st.integers(1, 6),
    avg_density=st.floats(0.01, 1.0), avg_nb_levels=st.integers(1, 5),
    avg_nb_att=st.integers(1, 6), avg_hhlevel_size=st.integers(1, 50),
    dim_sfactor=st.integers(1, 20), sigma_fraction=st.floats(0, 2),
)


@given(high_params, st.integers(0, 2 ** 40))
@settings(max_examples=200, deadline=None)
def test_derived_params_always_valid_and_deterministic(h, seed):
    p = derive_low_level(h, RandomStream(seed, sigma_fraction=h.sigma_fraction))
    assert validate(p) == []
    again = derive_low_level(h, RandomStream(seed, sigma_fraction=h.sigma_fraction))
    assert again.to_text() == p.to_text()
