"""Graph clustering under local edge and measure bounds.

The heavy lifting lives in the compiled ``_core`` extension; this package
only re-exports it so ``import localclust`` works both from an installed
wheel (where ``_core`` sits inside the package) and from a build tree
(where the extension is found on ``PYTHONPATH`` next to the package).
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
