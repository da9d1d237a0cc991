from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("srcores._kernels", ["src/srcores/_kernels.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level="3"))
