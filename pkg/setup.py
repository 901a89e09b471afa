from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hypercode._gf2core",
                ["src/hypercode/_gf2core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback (hypercode._gf2py) is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
