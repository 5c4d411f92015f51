"""Named configurations.

``snowflake`` is the untouched default parameter set. The others are written
at the low level so their shape and sizes are exact; Gaussian picks during
generation still use the default dispersion.
"""

PRESETS = {
    "snowflake": "",
    "desk": """\
# two 2-level dimensions of sizes [2, 6]; 36 fact combinations at density 0.5
nb_ft = 1
nb_dim = 2
tot_nb_dim = 2
nb_meas = 5
density = 0.5
nb_levels = 2, 2
nb_att = 5, 5; 5, 5
hhlevel_size = 2, 2
dim_sfactor = 3, 3
seed = 42
""",
    "star": """\
# one fact table over three flat dimensions of 20 rows
nb_ft = 1
nb_dim = 3
tot_nb_dim = 3
nb_meas = 4
density = 0.5
nb_levels = 1, 1, 1
nb_att = 5; 5; 5
hhlevel_size = 20, 20, 20
dim_sfactor = 1, 1, 1
seed = 42
""",
    "constellation": """\
# two fact tables over three of five dimensions each, so at least one is shared
nb_ft = 2
nb_dim = 3, 3
tot_nb_dim = 5
nb_meas = 3, 3
density = 0.5, 0.5
nb_levels = 2, 2, 2, 2, 2
nb_att = 3, 3; 3, 3; 3, 3; 3, 3; 3, 3
hhlevel_size = 3, 3, 3, 3, 3
dim_sfactor = 2, 2, 2, 2, 2
seed = 42
""",
}
