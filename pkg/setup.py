import numpy
from setuptools import Extension, setup
from Cython.Build import cythonize

compiler_directives = {
    "boundscheck": False,
    "wraparound": False,
    "cdivision": True,
    "initializedcheck": False,
    "language_level": "3",
}

ext_modules = [
    Extension(
        "ccindex._kernels._ckernels",
        ["src/ccindex/_kernels/_ckernels.pyx"],
        extra_compile_args=["-O3"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(ext_modules, compiler_directives=compiler_directives))
