"""Software component identification from class dependency graphs, with semantic evaluation."""

__version__ = "0.1.0"
