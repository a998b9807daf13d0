import os

import numpy as np
from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the numpy
# implementation when the extension is missing (CLOUDCAST_NO_EXT=1 skips it).
ext_modules = []
if not os.environ.get("CLOUDCAST_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "cloudcast._core_c",
                    ["src/cloudcast/_core_c.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
