"""Internal package for vector lattices, order sets, families and topologies.

Structured like this to allow for internal sharing of non-public functions.
"""

from . import cli, config, core, nets, order_sets, status, theorems, topologies

__all__ = [
    "cli",
    "config",
    "core",
    "nets",
    "order_sets",
    "status",
    "theorems",
    "topologies",
]
