import os
import io
from setuptools import setup, find_packages

# The directory containing this file
DESCRIPTION = "Exact genus bounds and chi tables for hyperelliptic fibrations"
here = os.path.abspath(os.path.dirname(__file__))

# The text of the README file
try:
    with io.open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
        README = '\n' + f.read()
except FileNotFoundError:
    README = DESCRIPTION

# This call to setup() does all the work
setup(
    name="hyperfib",
    version="1.0.0",
    description=DESCRIPTION,
    long_description=README,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=["tests"]),
    package_data={"hyperfib.enumerator": ["data/*.csv"]},
    include_package_data=True,
    install_requires=["pydantic"],
    extras_require={"dev": ["sympy"]},
    entry_points={"console_scripts": ["hyperfib=hyperfib.cli:main"]},
)
