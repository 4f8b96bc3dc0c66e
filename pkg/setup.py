import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("ENERGYOPS_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "energyops._kernel._speedups",
                ["src/energyops/_kernel/_speedups.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
