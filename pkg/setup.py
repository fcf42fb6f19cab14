"""Build script: compiles the optional native kernel extension.

The package works without the extension (pure-Python kernels are selected
at import time), so a failed compile downgrades to a warning instead of
aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/craftbench/_kernels/_native.pyx",
        language_level=3,
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
    for ext in ext_modules:
        ext.include_dirs.append(numpy.get_include())
        # -ffp-contract=off: the pure-Python fallback must produce bit
        # identical float64 results, so FMA contraction is disabled.
        ext.extra_compile_args = ["-O3", "-ffp-contract=off"]
except Exception as exc:  # noqa: BLE001 - any build-env problem means "no extension"
    print(f"warning: native kernels will not be built ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
