import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the compiled kernels when a toolchain exists; never fail the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn("compiled kernels skipped (%s); the pure-Python fallback will be used" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn("building %s failed (%s); the pure-Python fallback will be used" % (ext.name, exc))


def extensions():
    if os.environ.get("TWOCOLOR_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not installed; the pure-Python kernels will be used")
        return []
    return cythonize(
        [Extension("twocolor._speedups", ["src/twocolor/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
