"""Build script.

The hot search kernel lives in a Cython extension (boundtrack._spkern).
If Cython or a C compiler is unavailable the build falls through and the
package runs on the pure-Python fallback (boundtrack._sp_py) instead.
"""
import numpy
from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "boundtrack._spkern",
                ["src/boundtrack/_spkern.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
