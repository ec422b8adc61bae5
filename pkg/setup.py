import sys

from setuptools import setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in qeuler.kernels._pure when the extension is unavailable.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/qeuler/kernels/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover
    print(f"warning: building without compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
