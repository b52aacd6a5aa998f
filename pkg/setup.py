import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("IFDIST_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("ifdist._ckernels", ["src/ifdist/_ckernels.pyx"], extra_compile_args=["-O3", "-fno-math-errno"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
