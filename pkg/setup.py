import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package still works without the compiled core: the numpy fallback
    # in edgeloop.kernels is selected at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "edgeloop.kernels._fastcore",
                ["src/edgeloop/kernels/_fastcore.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
