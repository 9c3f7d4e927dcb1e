"""Build script: compiles the optional root-finding extension.

The package is pure Python except for one hot spot, the simultaneous
root-iteration kernel.  If Cython or a C compiler is unavailable the
build proceeds without the extension and the package falls back to the
pure-Python kernel at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [Extension("szego._roots_core", ["src/szego/_roots_core.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - compiler-less environments
    print(f"warning: building without compiled kernel ({exc})")
    extensions = []

setup(ext_modules=extensions)
