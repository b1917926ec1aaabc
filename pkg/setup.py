"""Build hook: compile the optional C kernel when a toolchain is available.

The package is fully functional without the extension; `jonq.kernel`
falls back to the pure-Python twin at import time.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build extensions, but never fail the install over them."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing, etc.
            sys.stderr.write(f"jonq: skipping C kernel build ({exc})\n")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(f"jonq: skipping {ext.name} ({exc})\n")


def extensions():
    if os.environ.get("JONQ_NO_EXT") == "1":
        return []
    pyx = os.path.join("src", "jonq", "_kernel_c.pyx")
    c = os.path.join("src", "jonq", "_kernel_c.c")
    try:
        from Cython.Build import cythonize

        return cythonize(
            [Extension("jonq._kernel_c", [pyx])], language_level="3"
        )
    except ImportError:
        if os.path.exists(c):
            return [Extension("jonq._kernel_c", [c])]
        return []


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
