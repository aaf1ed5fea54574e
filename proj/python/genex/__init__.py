"""Keyphrase extraction toolkit."""

try:
    from ._genex import *  # noqa: F401,F403  (installed package layout)
    from ._genex import __doc__ as _doc
except ImportError:  # in-tree build: _genex sits on PYTHONPATH
    from _genex import *  # noqa: F401,F403
    from _genex import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
