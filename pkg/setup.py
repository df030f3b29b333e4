"""Build hook for the optional compiled kernel.

The package is pure Python by default; if Cython and a C compiler are
available the hot reduction loops are compiled as homdeg.kernel.ckernel
and picked up automatically at import time.  A failed extension build is
not an error: the install falls back to the pure-Python kernel.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/homdeg/kernel/ckernel.pyx"], language_level=3
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
