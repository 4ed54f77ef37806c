"""aspec: exact-rational computations with finite-dimensional associative
algebras — radicals, simple modules, Ext groups, deformation completions,
local-function rings, spectra with their D(f) topology, and structure
presheaves/sheaves on the resulting finite spaces.
"""

from aspec._backend import backend_name

__all__ = ["backend_name"]
__version__ = "0.1.0"
