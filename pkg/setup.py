"""Build the optional compiled kernels; the package falls back to the pure
Python implementations when the extension is unavailable."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FDALG_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("fdalg._kernels._fast",
                       ["src/fdalg/_kernels/_fast.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
