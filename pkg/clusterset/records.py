# coding=utf8
"""
Copyright (C) 2016-2017 Laurent Courty
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

from datetime import datetime
import sys
import csv

from clusterset.const import DefaultValues


class TrajectoryRecord():
    """Write a trajectory to a CSV file, one line per step:
    t, matrix, spread, x_0, ..., x_{n-1}
    The initial state is written with an empty matrix name.
    """
    def __init__(self, file_name, n, digits=DefaultValues.CSV_DIGITS):
        self.n = n
        self.num_format = '{{:.{}g}}'.format(digits)
        self.fields = ['t', 'matrix', 'spread'] + ['x_{}'.format(i) for i in range(n)]
        self.file_name = self.set_file_name(file_name)

    def set_file_name(self, file_name):
        '''Generate output file name
        '''
        if not file_name:
            file_name = "{}_trajectory.csv".format(
                str(datetime.now().strftime('%Y-%m-%dT%H:%M:%S')))
        return file_name

    def format_line(self, t, matrix, spread, state):
        line = dict(t=t, matrix=matrix, spread=self.num_format.format(spread))
        for i, value in enumerate(state):
            line['x_{}'.format(i)] = self.num_format.format(value)
        return line

    def lines(self, traj):
        yield self.format_line(0, '', traj.spread_log[0], traj.states[0])
        for t, matrix in enumerate(traj.policy_log, start=1):
            yield self.format_line(t, matrix, traj.spread_log[t], traj.states[t])

    def write(self, traj):
        """Write header and every step. '-' writes to stdout.
        """
        if self.file_name == '-':
            self._write_to(sys.stdout, traj)
        else:
            with open(self.file_name, 'w', newline='') as f:
                self._write_to(f, traj)
        return self

    def _write_to(self, f, traj):
        writer = csv.DictWriter(f, fieldnames=self.fields, lineterminator='\n')
        writer.writeheader()
        for line in self.lines(traj):
            writer.writerow(line)
