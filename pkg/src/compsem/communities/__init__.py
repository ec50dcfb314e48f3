"""Community detection on undirected weighted graphs."""

from .infomap import infomap
from .leiden import leiden
from .partition import CDParams, DomainError, Partition
from .quality import UndefinedQualityError, map_equation, modularity

ALGORITHMS = {"leiden": leiden, "infomap": infomap}

__all__ = [
    "ALGORITHMS",
    "CDParams",
    "DomainError",
    "Partition",
    "UndefinedQualityError",
    "infomap",
    "leiden",
    "map_equation",
    "modularity",
]
