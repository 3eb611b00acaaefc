"""Kernel selection for the representation search.

The hot loop of :mod:`su2slopes.su2search` lives in a small compiled
extension (``su2slopes._quatopt``, built from Cython).  When the extension
is not available -- no compiler at install time, or a source checkout --
the pure-Python implementation with identical semantics is used instead.
``BACKEND`` records which one was selected; ``benchmarks/bench_quatopt.py``
compares the two.
"""

try:
    from . import _quatopt as _impl

    COMPILED = True
except ImportError:
    from . import _quatopt_py as _impl

    COMPILED = False

BACKEND = _impl.BACKEND_NAME

defect = _impl.defect
defect_gradient = _impl.defect_gradient
descend = _impl.descend


def available_backends():
    """Mapping backend name -> kernel module, for every importable backend."""
    backends = {}
    try:
        from . import _quatopt

        backends[_quatopt.BACKEND_NAME] = _quatopt
    except ImportError:
        pass
    from . import _quatopt_py

    backends[_quatopt_py.BACKEND_NAME] = _quatopt_py
    return backends
