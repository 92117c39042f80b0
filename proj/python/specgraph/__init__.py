"""Spectral radius, vertex connectivity and exhaustive census of small graphs."""

from ._specgraph import *  # noqa: F401,F403
from ._specgraph import Graph, ParseError, NonConvergence  # noqa: F401

__version__ = "0.1.0"
