import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("WOSNET_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "wosnet._ckernels",
                    ["src/wosnet/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    language="c++",
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError as exc:
        # pure-Python kernels are used at runtime when the extension is absent
        print(f"wosnet: skipping compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
