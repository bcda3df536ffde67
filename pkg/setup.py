from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("packcol._core", sources=["src/packcol/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback in packcol._pycore is used when the extension
    # is absent; the package works either way.
    ext_modules = []

setup(ext_modules=ext_modules)
