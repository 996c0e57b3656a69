"""Braid-group algebra and holonomic/Legendrian knot parametrization toolkit.

The heavy lifting lives in the C++ extension ``holobraid._core``: Garside
normal and summit forms, the conjugacy decision with witnesses, holonomic
N|P rewriting with verifiable isotopy certificates, and the numerical engine
for Fourier-parametrized curves and their Legendrian cousins.
"""

from holobraid._core import *  # noqa: F401,F403
from holobraid._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = (__doc__ or "") + "\n" + (_core_doc or "")
