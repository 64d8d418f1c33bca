import os

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or with
# MATROID_FORGE_NO_EXT=1) the package installs pure-Python and selects the
# fallback backend at import time.
ext_modules = []
if os.environ.get("MATROID_FORGE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "matroid_forge._kernels._fastrank",
                    ["src/matroid_forge/_kernels/_fastrank.pyx"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
