"""Build the optional compiled simplex kernel.

The package works without it (``polycal._kernel_py`` is used instead), so a
missing Cython or compiler only skips the extension.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("polycal._kernel", ["src/polycal/_kernel.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
