import sys

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or a C compiler) the
# package falls back to the pure-Python kernels in cvtgrt._kernels.pure.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cvtgrt._kernels.core",
                ["src/cvtgrt/_kernels/core.pyx"],
                # -ffp-contract=off keeps C arithmetic bit-identical to the
                # pure-Python kernels (no FMA contraction).
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not found; building without the compiled kernel.", file=sys.stderr)

setup(ext_modules=ext_modules)
