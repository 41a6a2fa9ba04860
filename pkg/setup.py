import sys

from setuptools import setup

# The compiled flow kernel is optional: if Cython or a C compiler is
# missing, the package installs without it and sepkit falls back to the
# pure-Python kernel at import time.
ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "sepkit._flowcore",
                ["src/sepkit/_flowcore.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover
    print(f"sepkit: building without compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
