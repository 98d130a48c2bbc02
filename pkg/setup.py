"""Build the optional compiled labelling kernel.

The package works without it; ``aspic.kernels`` falls back to the pure
Python implementation when the extension is missing.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("ASPIC_NO_EXTENSIONS"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "aspic._labelling",
                    ["src/aspic/_labelling.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
