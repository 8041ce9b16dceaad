from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("polysyz._fastrank", ["src/polysyz/_fastrank.pyx"])],
        language_level=3,
    )
except ImportError:
    # pure-Python install; the numpy fallback kernel is used at runtime
    ext_modules = []

setup(ext_modules=ext_modules)
