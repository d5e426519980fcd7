# coding=utf8
"""
Copyright (C) 2020 The clusterset developers

This program is free software; you can redistribute it and/or
modify it under the terms of the GNU General Public License
as published by the Free Software Foundation; either version 2
of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.
"""


class DefaultValues():
    """Default config values
    """
    # tolerance on row (and column) sums
    ROW_SUM_TOL = 1e-9
    # entries at or below are treated as exact zeros
    ZERO_TOL = 1e-12
    # tolerance when comparing block sums
    EQUALITY_TOL = 1e-9
    # every tolerance must stay below that value
    MAX_TOL = 1e-3
    # largest dimension handled by bitmask vertex sets
    DIMENSION_CAP = 20
    # exhaustive cut enumeration is 2^n
    CUT_BALANCE_CAP = 20
    # exhaustive variational maximum is 2^n
    EXHAUSTIVE_CAP = 20
    # maximum number of pair states explored by the decision search
    STATE_BUDGET = 5000000
    # simulation horizon (steps)
    HORIZON = 200
    # seed of the random switching policy
    SEED = 0
    # convergence threshold on the cluster spread
    EPS = 1e-6
    # minimum length of the trailing window used to detect convergence
    MIN_WINDOW = 10
    # tau_C below which a forward product is considered converged
    TAU_LIMIT = 1e-10
    # oracle limits
    ORACLE_MAX_N = 5
    ORACLE_CASES = 100
    ORACLE_N = 4
    ORACLE_K = 2
    ORACLE_MAX_SET_SIZE = 3
    ORACLE_SEED = 1
    # spread kept by a witness replay on a negative case
    ORACLE_MIN_SPREAD = 0.5
    # grid step of randomly generated weights
    GRID_STEP = 0.25
    # significant digits in CSV outputs
    CSV_DIGITS = 17


class VerbosityLevel():
    """Messenger verbosity levels
    """
    SUPER_QUIET = 0
    QUIET = 1
    MESSAGE = 2
    VERBOSE = 3
    DEBUG = 4


class ExitCode():
    """Process exit codes. Stable contract of the command line.
    """
    POSITIVE = 0
    ERROR = 1
    INCONCLUSIVE = 2
    NEGATIVE = 3
    DISAGREEMENT = 4
