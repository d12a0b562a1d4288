"""Braid groups, Garside normal forms, real-structure monodromy
factorizations, and Alexander invariants, backed by a C++ core."""

try:
    from . import _core
except ImportError:  # build-tree layout: the extension sits directly on sys.path
    import _core  # type: ignore[no-redef]

globals().update({k: v for k, v in vars(_core).items() if not k.startswith("_")})

__all__ = sorted(k for k in vars(_core) if not k.startswith("_"))
__version__ = "1.0.0"
