import sys

from setuptools import Extension, setup

# The compiled multiplier is an optional speedup; the package falls back to a
# vectorized numpy implementation when the build is unavailable.
ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "octokernels._accel._octmul",
                ["src/octokernels/_accel/_octmul.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    print(f"octokernels: skipping compiled core ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
