"""Build hook: compile the optional Cython kernel if the toolchain allows.

The package is fully functional without the extension; `evonorm.kernels`
falls back to the pure-Python implementation at import time.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("EVONORM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/evonorm/_zpoly.pyx"],
            language_level="3",
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
