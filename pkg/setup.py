"""Build script for the optional compiled term kernel.

The extension is marked optional: a failed build leaves the pure-Python
kernel in charge and the package fully functional.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "grobcon._core._speedups",
                ["src/grobcon/_core/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
