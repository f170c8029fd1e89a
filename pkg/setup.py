from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install: the package falls back to the interpreted kernels.
    extensions = []
else:
    extensions = cythonize(
        [
            Extension(
                "dfin._kernels",
                ["src/dfin/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
