"""Build script for the optional compiled kernel.

The package is fully functional without the extension; `quatlat._kernel`
falls back to the pure-Python twin when the compiled module is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "quatlat._kernel._speedups",
                ["src/quatlat/_kernel/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
