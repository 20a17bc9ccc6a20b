"""Build hook for the optional compiled SAT core.

The package is fully functional without the extension: argonaut.sat falls
back to the pure-Python solver at import time. We therefore treat any
build failure here (no Cython, no C compiler) as non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "argonaut.sat._satcore",
                ["src/argonaut/sat/_satcore.pyx"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"argonaut: skipping compiled SAT core ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
