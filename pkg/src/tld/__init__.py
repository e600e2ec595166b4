"""
Fully commutative elements of Coxeter groups of types A and D, their heaps,
and the decorated Temperley-Lieb diagram algebras that they index.
"""

from .algebra import *  # noqa: F401,F403
from .cellular import *  # noqa: F401,F403
from .coxeter import *  # noqa: F401,F403
from .diagram import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .heap import *  # noqa: F401,F403
from .render import *  # noqa: F401,F403

__version__ = "0.1.0"
