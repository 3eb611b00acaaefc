"""Build script: compiles the quaternion descent kernel when Cython and a C
compiler are available, and falls back to the pure-Python kernel otherwise.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Treat extension build failures as non-fatal.

    The package is fully functional without the compiled kernel; it just
    runs the representation search much more slowly.
    """

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            "WARNING: building the su2slopes._quatopt extension failed;\n"
            f"         falling back to the pure-Python kernel ({exc})",
            file=sys.stderr,
        )


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "su2slopes._quatopt",
                ["src/su2slopes/_quatopt.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("WARNING: Cython not found; installing without the compiled kernel",
          file=sys.stderr)
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
