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

import sys
import os

from clusterset.clusterset_error import ClusterSetFatal
from clusterset.const import VerbosityLevel

OUTPUT = sys.stderr
FATAL = "ERROR: "
WARNING = "WARNING: "
PAD = " " * 20  # Necessary to print a clean line
ENV_VAR = 'CLUSTERSET_VERBOSE'

raise_on_error = False


def verbosity():
    """Return the current verbosity as integer
    """
    try:
        return int(os.environ.get(ENV_VAR))
    except (TypeError, ValueError):
        return VerbosityLevel.QUIET


def set_verbosity(level):
    """Store the verbosity level in the environment,
    so that worker processes inherit it.
    """
    os.environ[ENV_VAR] = str(level)


def percent(done, total, label=u""):
    """Display progress of a long computation
    """
    try:
        advance_perc = done / total
    except ZeroDivisionError:
        advance_perc = 1.
    if verbosity() == VerbosityLevel.QUIET:
        print(u"{:.1%}".format(advance_perc), file=OUTPUT, end='\r')
    elif verbosity() >= VerbosityLevel.MESSAGE:
        txt = u"{label}{done}/{total} Advance: {perc:.1%}{pad}"
        disp = txt.format(label=label, done=done, total=total,
                          perc=advance_perc, pad=" " * 10)
        print(disp, file=OUTPUT, end='\r')


def _display(level, msg, prefix=u""):
    if verbosity() >= level:
        print(prefix + msg + PAD, file=OUTPUT)


def message(msg):
    _display(VerbosityLevel.MESSAGE, msg)


def verbose(msg):
    _display(VerbosityLevel.VERBOSE, msg)


def debug(msg):
    _display(VerbosityLevel.DEBUG, msg)


def warning(msg):
    """Warnings are shown unless -qq is given"""
    _display(VerbosityLevel.SUPER_QUIET, msg, WARNING)


def fatal(msg):
    """Raise ClusterSetFatal when raise_on_error is set, exit otherwise
    """
    if raise_on_error:
        raise ClusterSetFatal(msg)
    sys.exit(FATAL + msg + PAD)
