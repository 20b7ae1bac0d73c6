"""Stallings-automata computations in free groups.

Thin wrapper over the C++ extension: folding, membership, intersections,
joins, fringes, pro-V denseness and closures.
"""

try:
    from ._provar import (
        Graph,
        ProvarError,
        closure,
        dense,
        fold,
        fringe,
        intersect,
        join,
        member,
    )
except ImportError:  # running against a build tree on PYTHONPATH
    from _provar import (
        Graph,
        ProvarError,
        closure,
        dense,
        fold,
        fringe,
        intersect,
        join,
        member,
    )

__all__ = [
    "Graph",
    "ProvarError",
    "closure",
    "dense",
    "fold",
    "fringe",
    "intersect",
    "join",
    "member",
]
