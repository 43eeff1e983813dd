"""Exact super-derivation and local super-derivation certifier.

The heavy lifting lives in the C++ extension module; this package re-exports
its surface.
"""

try:
    from ._superder import *  # noqa: F401,F403
    from ._superder import __doc__  # noqa: F401
except ImportError:  # extension on sys.path directly (in-tree builds)
    from _superder import *  # noqa: F401,F403
    from _superder import __doc__  # noqa: F401
