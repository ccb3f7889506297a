import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "ltistab._speedups",
        ["src/ltistab/_speedups.pyx"],
        extra_compile_args=["-O3"],
    )
]

if cythonize is not None and not os.environ.get("LTISTAB_NO_SPEEDUPS"):
    setup(ext_modules=cythonize(extensions, language_level=3))
else:
    # Pure-NumPy fallback kernels are used at runtime (see ltistab._kernels).
    setup()
