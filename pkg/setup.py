"""Build script: compiles the optional fast kernel.

Set SCROLLSLOPES_PURE=1 to skip the extension and install pure Python only.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SCROLLSLOPES_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "scrollslopes._speedups",
                    ["src/scrollslopes/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython: the package still works through the pure kernel.
        ext_modules = []

setup(ext_modules=ext_modules)
