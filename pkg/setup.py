from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "fuzzgraph._speedups",
        ["src/fuzzgraph/_speedups.pyx"],
        extra_compile_args=["-O3"],
    )
    # Build failures fall back to the pure-Python kernels selected at import.
    ext.optional = True
    ext_modules = cythonize(
        [ext], compiler_directives={"language_level": "3"}, quiet=True
    )

setup(ext_modules=ext_modules)
