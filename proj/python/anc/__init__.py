"""Layered amplify-and-forward relay networks.

Exact end-to-end SNR/rate evaluation, feasibility bounds, layer-by-layer and
exhaustive scaling-factor optimization, and the closed forms for chains and
equal-gain layered networks. Everything is implemented in the C++ core; this
package re-exports the extension module.
"""

from ._anc import *  # noqa: F401,F403
from ._anc import __doc__ as _core_doc  # noqa: F401

__version__ = "1.0.0"
