"""
Value types for finite fuzzy soft spaces
"""
from .grade import Grade, ZERO, ONE
from .soft_set import Context, FuzzySoftSet
from .topology import Topology, ValidationReport
from .mapping import SoftMapping
from .cover import MembershipRule, SubcoverMode, CoverFamily
from .space import SpaceDefinition, SpaceModel

__all__ = [
    'Grade',
    'ZERO',
    'ONE',
    'Context',
    'FuzzySoftSet',
    'Topology',
    'ValidationReport',
    'SoftMapping',
    'MembershipRule',
    'SubcoverMode',
    'CoverFamily',
    'SpaceDefinition',
    'SpaceModel',
]
