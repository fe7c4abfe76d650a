"""Build script: compiles the optional Cython kernel.

The package works without the extension (a numpy-based fallback is selected
at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gkdim._akernel", ["src/gkdim/_akernel.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
