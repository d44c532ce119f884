"""Builds the optional compiled kernels; everything else is in pyproject.toml.

Set QTAIL_NO_EXT=1 to skip the extension.  If Cython or a C compiler is
missing, the package still installs and runs on the pure-Python kernels.
"""
import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as e:  # no compiler: fall back to pure Python
            print(f"warning: compiled kernels not built ({e}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as e:
            print(f"warning: could not build {ext.name} ({e}); using pure Python")


def extensions():
    if os.environ.get("QTAIL_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(["src/qtail/_kernels.pyx"], language_level=3, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
