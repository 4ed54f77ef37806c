"""Build script: compiles the optional row-reduction kernel.

The package is pure Python apart from ``aspec._kernels``, a Cython
translation of ``aspec._kernels_py``.  If Cython or a C compiler is
missing the extension is skipped and the interpreter fallback is used;
the two implementations are bit-for-bit interchangeable.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("aspec._kernels", ["src/aspec/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
