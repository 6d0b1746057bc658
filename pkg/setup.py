from setuptools import Extension, setup

# The compiled kernel is an optional speedup; the package falls back to the
# pure-Python implementation in e2crit._kernels_py when it is missing.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "e2crit._kernels_cy",
                ["src/e2crit/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
