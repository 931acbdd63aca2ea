"""Bit-parallel matching of gapped patterns."""

try:
    from ._gapmatch import *  # noqa: F401,F403
    from ._gapmatch import __version__  # noqa: F401
except ImportError:  # plain CMake build tree: the module sits next to the package
    from _gapmatch import *  # noqa: F401,F403
    from _gapmatch import __version__  # noqa: F401
