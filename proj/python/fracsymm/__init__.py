from ._fracsymm import *  # noqa: F401,F403
from ._fracsymm import __version__  # noqa: F401
