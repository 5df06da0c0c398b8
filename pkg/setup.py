"""Build the optional compiled sweep kernel.

Without Cython or a C compiler the package installs pure-Python and
carlos_scales.kernels falls back to the interpreted kernel.
"""
from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [
            Extension(
                "carlos_scales._sweep",
                ["src/carlos_scales/_sweep.pyx"],
                include_dirs=[np.get_include()],
                # no -ffast-math: results must match the Python kernel bit for bit
                extra_compile_args=["-O2", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
