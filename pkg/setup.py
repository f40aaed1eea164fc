"""Build script.

Compiles the optional chord-intersection kernel when Cython and a C
compiler are available.  The package is fully functional without it: at
import time the geometry layer falls back to the pure-Python twin of the
kernel, which produces bit-identical results.

Set RECURLAB_PURE_PYTHON=1 to skip the compiled extension entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Best-effort extension build: a compile failure is a warning, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"warning: compiled kernel skipped ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} skipped ({exc}); using pure-Python fallback")


ext_modules = []
cmdclass = {}
if not os.environ.get("RECURLAB_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "recurlab.geometry._intersect_cy",
                    ["src/recurlab/geometry/_intersect_cy.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
        cmdclass = {"build_ext": OptionalBuildExt}
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass=cmdclass)
