"""Build script: compiles the optional verification kernels.

The package is pure Python except for ``meadows._ckernels``, a small Cython
extension that accelerates the exhaustive table scans (axiom checking and
generalized-inverse search).  If Cython or a C compiler is unavailable the
extension is skipped and the pure-Python twins in ``meadows._kernels_py``
are used at runtime.  Set MEADOWS_NO_EXT=1 to skip the extension build.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("MEADOWS_NO_EXT", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("meadows._ckernels", ["src/meadows/_ckernels.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
