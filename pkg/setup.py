"""Build script for the optional compiled kernel.

A pure-python install (no C compiler, no Cython) still works: kernels.py
falls back to the numpy implementation at import time.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("COARSE_EMBED_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "coarse_embed._speedups",
                    ["src/coarse_embed/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
