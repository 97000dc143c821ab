"""Build script: compiles the optional elimination-kernel extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
install still succeeds and the package falls back to the pure-Python
backend at import time.  Set MULTIBRAID_NO_EXT=1 to skip the build.
"""
import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping extension build ({exc}); "
                  "multibraid will use the pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "multibraid will use the pure-Python backend")


extensions = []
if not os.environ.get("MULTIBRAID_NO_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [Extension("multibraid._speed", ["src/multibraid/_speed.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available; building without the compiled backend")

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
