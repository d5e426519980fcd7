# coding=utf8
"""
Copyright (C) 2015-2020 Laurent Courty
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

from configparser import ConfigParser, Error as ConfigParserError

import clusterset.messenger as msgr
from clusterset.const import DefaultValues
from clusterset.matrixcore import Tolerances
import clusterset.clusterset_error as cs_error


# (section, key) -> name of the command line attribute overriding it
CLI_OVERRIDES = {('decision', 'state_budget'): 'state_budget',
                 ('simulation', 'horizon'): 'horizon',
                 ('simulation', 'eps'): 'eps',
                 ('simulation', 'seed'): 'seed',
                 ('oracle', 'cases'): 'cases',
                 ('oracle', 'n'): 'n',
                 ('oracle', 'k'): 'k',
                 ('oracle', 'seed'): 'seed',
                 ('oracle', 'jobs'): 'jobs'}


class RunConfig():
    """Effective options of one command
    """
    def __init__(self, input_path, tolerances, decision_params,
                 sim_params, oracle_params, witness_path=None, out_path=None):
        self.input_path = input_path
        self.tolerances = tolerances
        self.decision_params = decision_params
        self.sim_params = sim_params
        self.oracle_params = oracle_params
        self.witness_path = witness_path
        self.out_path = out_path

    @property
    def horizon(self):
        return self.sim_params['horizon']

    @property
    def eps(self):
        return self.sim_params['eps']

    @property
    def seed(self):
        return self.sim_params['seed']

    @property
    def state_budget(self):
        return self.decision_params['state_budget']

    @property
    def dimension_cap(self):
        return self.decision_params['dimension_cap']


class ConfigReader():
    """Merge defaults, an optional option file and the command line.
    Later sources win.
    """
    def __init__(self, filename=None, cli_args=None):
        self.config_file = filename
        self.cli_args = cli_args
        self.__set_defaults()
        self.set_entry_values()

    def __set_defaults(self):
        """Set dictionaries of default values"""
        self.tolerances = {'row_sum_tol': DefaultValues.ROW_SUM_TOL,
                           'zero_tol': DefaultValues.ZERO_TOL,
                           'equality_tol': DefaultValues.EQUALITY_TOL}
        self.decision_params = {'state_budget': DefaultValues.STATE_BUDGET,
                                'dimension_cap': DefaultValues.DIMENSION_CAP,
                                'cut_balance_cap': DefaultValues.CUT_BALANCE_CAP}
        self.sim_params = {'horizon': DefaultValues.HORIZON,
                           'eps': DefaultValues.EPS,
                           'seed': DefaultValues.SEED,
                           'min_window': DefaultValues.MIN_WINDOW,
                           'tau_limit': DefaultValues.TAU_LIMIT}
        self.oracle_params = {'cases': DefaultValues.ORACLE_CASES,
                              'n': DefaultValues.ORACLE_N,
                              'k': DefaultValues.ORACLE_K,
                              'seed': DefaultValues.ORACLE_SEED,
                              'max_set_size': DefaultValues.ORACLE_MAX_SET_SIZE,
                              'min_spread': DefaultValues.ORACLE_MIN_SPREAD,
                              'jobs': 1}
        # document tolerances are kept unless the option file sets them
        self.tolerances_given = False
        self.sections = {'tolerances': self.tolerances,
                         'decision': self.decision_params,
                         'simulation': self.sim_params,
                         'oracle': self.oracle_params}
        return self

    def set_entry_values(self):
        """Read and check entry values
        """
        if self.config_file:
            self.read_param_file()
        if self.cli_args is not None:
            self.apply_cli_args()
        self.check_tolerances()
        self.check_decision_params()
        self.check_sim_params()
        self.check_oracle_params()
        return self

    def read_param_file(self):
        """Read the option file. Only known keys are read,
        with the type of their default value.
        """
        params = ConfigParser()
        try:
            f = params.read(self.config_file)
        except ConfigParserError as err:
            msgr.fatal(u"File <{}> cannot be parsed: {}".format(self.config_file, err))
        if not f:
            msgr.fatal(u"File <{}> not found".format(self.config_file))
        self.tolerances_given = params.has_section('tolerances')
        for section, values in self.sections.items():
            for k, default in values.items():
                if not params.has_option(section, k):
                    continue
                try:
                    if isinstance(default, int):
                        values[k] = params.getint(section, k)
                    else:
                        values[k] = params.getfloat(section, k)
                except ValueError:
                    msgr.fatal(u"[{}] {}: invalid value <{}>".format(section, k,
                                                                    params.get(section, k)))
            if params.has_section(section):
                for k in params.options(section):
                    if k not in values:
                        msgr.warning(u"[{}] unknown option <{}> ignored".format(section, k))
        return self

    def apply_cli_args(self):
        """Command line flags given explicitly override the file"""
        for (section, k), attr in CLI_OVERRIDES.items():
            value = getattr(self.cli_args, attr, None)
            if value is not None:
                self.sections[section][k] = value
        return self

    def check_tolerances(self):
        try:
            Tolerances(**self.tolerances)
        except cs_error.ValidationError as err:
            msgr.fatal(u"[tolerances] {}".format(err))
        return self

    def check_decision_params(self):
        for k, v in self.decision_params.items():
            if not v > 0:
                msgr.fatal(u"{} value must be positive".format(k))
        return self

    def check_sim_params(self):
        """Check if the simulation parameters are positive
        """
        for k, v in self.sim_params.items():
            if k == 'seed':
                if v < 0:
                    msgr.fatal(u"seed must be nonnegative")
            elif not v > 0:
                msgr.fatal(u"{} value must be positive".format(k))
        return self

    def check_oracle_params(self):
        p = self.oracle_params
        if not 1 <= p['n'] <= DefaultValues.ORACLE_MAX_N:
            msgr.fatal(u"oracle is desk-scale only: n must be in [1, {}], got {}".format(
                DefaultValues.ORACLE_MAX_N, p['n']))
        if not 1 <= p['k'] <= p['n']:
            msgr.fatal(u"number of clusters must be in [1, n], got {}".format(p['k']))
        for k in ('cases', 'max_set_size', 'jobs'):
            if p[k] < 1:
                msgr.fatal(u"{} value must be positive".format(k))
        if not 0 < p['min_spread'] <= 1:
            msgr.fatal(u"min_spread must be in (0, 1]")
        return self

    def run_config(self):
        args = self.cli_args
        tolerances = Tolerances(**self.tolerances) if self.tolerances_given else None
        return RunConfig(input_path=getattr(args, 'input', None),
                         tolerances=tolerances,
                         decision_params=dict(self.decision_params),
                         sim_params=dict(self.sim_params),
                         oracle_params=dict(self.oracle_params),
                         witness_path=getattr(args, 'witness', None),
                         out_path=getattr(args, 'out', None))

    def display_run_param(self):
        """Display the effective options if verbose
        """
        inter_txt = u"#" * 50
        txt_template = u"{:<24s} {}"
        for section, values in self.sections.items():
            msgr.verbose(u"{}".format(inter_txt))
            msgr.verbose(u"{}:".format(section.capitalize()))
            for k, v in values.items():
                msgr.verbose(txt_template.format(k, v))
        msgr.verbose(u"{}".format(inter_txt))
        return self
