import codecs
import os

from setuptools import find_packages, setup

here = os.path.abspath(os.path.dirname(__file__))

with codecs.open(os.path.join(here, "README.md"), encoding="utf-8") as fh:
    long_description = "\n" + fh.read()

DESCRIPTION = "Orthologic prover and proof kernel"
LONG_DESCRIPTION = "Formulas, three sequent calculi with a proof checker, proof translations, proof search and benchmarks"

# Setting up
setup(
    name="orthologic_prover",
    version="1.0.0",
    description=DESCRIPTION,
    long_description_content_type="text/markdown",
    long_description=long_description,
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=["lark~=1.1", "structlog~=22.3", "pydantic~=1.9", "pytz~=2024.1", "PyYAML~=6.0", "bumpversion"],
    entry_points={"console_scripts": ["orthologic = orthologic_prover.cli:main"]},
    keywords=["python", "orthologic", "ortholattice", "sequent", "proof search", "focusing"],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: Unix",
        "Operating System :: MacOS :: MacOS X",
        "Operating System :: Microsoft :: Windows",
    ],
)
