import os

import numpy
from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PLCHAIN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension(
                "plchain._snf_ext",
                ["src/plchain/_snf_ext.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            ), Extension(
                "plchain._sparse_ext",
                ["src/plchain/_sparse_ext.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
