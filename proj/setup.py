from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "oritatami._oritatami",
    sorted(glob("src/*.cpp")) + ["python/module.cpp"],
    include_dirs=["include"],
    cxx_std=20,
)

setup(
    packages=["oritatami"],
    package_dir={"oritatami": "python/oritatami"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
