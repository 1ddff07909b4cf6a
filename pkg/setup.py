import os

from setuptools import Extension, setup

# The compiled elimination kernel is optional: PERAZZO_PURE=1 skips it and the
# package falls back to the pure-Python twin at import time.
ext_modules = []
if os.environ.get("PERAZZO_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("perazzo._bareiss", ["src/perazzo/_bareiss.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
