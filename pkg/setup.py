"""Build script: compiles the exact integer kernels when Cython and a C
compiler are available; the package falls back to the pure-Python kernels
otherwise (see depthgeom.kernels)."""

import os

from setuptools import Extension, setup

ext_modules = []
_PYX = os.path.join(os.path.dirname(__file__), "src", "depthgeom", "_ckernels.pyx")
if os.path.exists(_PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "depthgeom._ckernels",
                    ["src/depthgeom/_ckernels.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
