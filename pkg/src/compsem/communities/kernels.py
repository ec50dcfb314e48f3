"""Pick the compiled kernels when available, else the pure-Python twins.

Set ``COMPSEM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py
if not os.environ.get("COMPSEM_PURE_PYTHON"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

move_nodes_modularity = _impl.move_nodes_modularity
move_nodes_mapequation = _impl.move_nodes_mapequation
refine_partition = _impl.refine_partition


def use_backend(name: str):
    """Switch the module-level kernels; returns the previous backend name."""
    global BACKEND, move_nodes_modularity, move_nodes_mapequation, refine_partition
    if name == "python":
        impl = _kernels_py
    elif name == "cython":
        from . import _kernels as impl
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    previous = BACKEND
    BACKEND = name
    move_nodes_modularity = impl.move_nodes_modularity
    move_nodes_mapequation = impl.move_nodes_mapequation
    refine_partition = impl.refine_partition
    return previous


def available_backends() -> list[str]:
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401

        names.append("cython")
    except ImportError:
        pass
    return names
