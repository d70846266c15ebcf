import os

from setuptools import Extension, setup

# The compiled kernel is an optional accelerator: the package falls back to
# the pure-Python implementation in magus._pure when the extension is absent.
ext_modules = []
if not os.environ.get("MAGUS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("magus._kernel", ["src/magus/_kernel.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
