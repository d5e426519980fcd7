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


class ClusterSetError(Exception):
    """General error class"""
    def __init__(self, msg=''):
        Exception.__init__(self, msg)
        self.msg = msg

    def __str__(self):
        return str(self.msg)


class ClusterSetFatal(ClusterSetError):
    """Raised by the messenger instead of exiting"""
    pass


class ValidationError(ClusterSetError):
    """Input that does not describe a valid object"""
    pass


class NegativeEntry(ValidationError):
    pass


class RowSumViolation(ValidationError):
    pass


class NonSquare(ValidationError):
    pass


class NonFinite(ValidationError):
    pass


class Overlap(ValidationError):
    pass


class NotCovering(ValidationError):
    pass


class EmptyCluster(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class DuplicateName(ValidationError):
    pass


class DocumentError(ValidationError):
    """Malformed JSON document"""
    pass


class DimensionTooLarge(ClusterSetError):
    """Dimension above an exhaustive-enumeration cap"""
    pass


class StateBudgetExceeded(ClusterSetError):
    """The pair-state search explored more states than allowed"""
    pass


class InternalInconsistency(ClusterSetError):
    """A live pair state without live successor"""
    pass


class UnknownMatrixName(ClusterSetError):
    pass


class CommonInfluenceViolated(ClusterSetError):
    pass


class EmptySequence(ClusterSetError):
    pass


class SupportMismatch(ClusterSetError):
    """Numeric and combinatorial supports disagree.
    Usually a sign of badly chosen tolerances.
    """
    pass
