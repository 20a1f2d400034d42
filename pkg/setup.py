"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python fallback is selected
at import time), so compilation failures are tolerated. Set
SPECTRAL_TURAN_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SPECTRAL_TURAN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "spectral_turan._kernels._core",
                    ["src/spectral_turan/_kernels/_core.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
