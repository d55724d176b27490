"""Builds the optional Cython kernel extension.

The package works without it (a numpy fallback is selected at import), so
the extension is skipped rather than failing the install when Cython or a
C compiler is unavailable.
"""
from setuptools import setup

ext_modules = []
try:
    import numpy
    from setuptools import Extension
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "stringrad.kernels._fast",
                ["src/stringrad/kernels/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"stringrad: skipping Cython extension build ({exc})")
    ext_modules = []

setup(ext_modules=ext_modules)
