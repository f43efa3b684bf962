"""Two-mode squeezed-light entanglement toolbox.

Everything lives in the compiled core; this package just re-exports it.
"""

from ._twinbeam import *  # noqa: F401,F403
from . import _twinbeam as _core

__version__ = "1.0.0"
__all__ = [name for name in dir(_core) if not name.startswith("_")]
