"""
sbsim package
=============

Package simulating spacecraft cruise and approach to a small body.
"""

from .mission import MissionModel  # noqa: F401
from .core import *  # noqa: F401
from .environment import *  # noqa: F401
from .power import *  # noqa: F401
from .attitude import *  # noqa: F401
from .navigation import *  # noqa: F401
from .comms import *  # noqa: F401
from .executive import *  # noqa: F401
from .config import *  # noqa: F401
from .sim import *  # noqa: F401
from .utils import *  # noqa: F401
from .errors import *  # noqa: F401

from . import (core, environment, power, attitude, navigation, comms,  # noqa
               executive, config, sim, utils, errors)
from ._version import __version__  # noqa: F401
from ._authors import __author__  # noqa: F401

__all__ = ['MissionModel']
__all__ += core.__all__
__all__ += environment.__all__
__all__ += power.__all__
__all__ += attitude.__all__
__all__ += navigation.__all__
__all__ += comms.__all__
__all__ += executive.__all__
__all__ += config.__all__
__all__ += sim.__all__
__all__ += utils.__all__
__all__ += errors.__all__
