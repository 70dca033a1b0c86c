# Copyright dsfft contributors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0

"""CMake bridge so `pip install .` builds the pybind11 module.

The extension is compiled by the project's own CMake tree (configured with
DSFFT_PYTHON_ONLY so tools and tests stay out of the wheel) and the staged
dsfft/_core library is copied to wherever setuptools expects the artifact.
"""

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        out_path = Path.cwd() / self.get_ext_fullpath(ext.name)
        out_path.parent.mkdir(parents=True, exist_ok=True)

        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                ext.sourcedir,
                "-DDSFFT_PYTHON_ONLY=ON",
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_temp,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", f"-j{os.cpu_count() or 2}"],
            cwd=build_temp,
            check=True,
        )

        staged = sorted((build_temp / "python" / "dsfft").glob("_core*"))
        if not staged:
            raise RuntimeError("CMake build produced no _core module")
        shutil.copy2(staged[0], out_path)


setup(
    packages=["dsfft"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("dsfft._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
