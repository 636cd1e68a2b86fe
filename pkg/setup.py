"""
Setup script for qinvar package.

For modern installations, use pyproject.toml.
This file exists for backward compatibility.
"""

from setuptools import setup
from pathlib import Path

# Read the contents of README file
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text(encoding="utf-8")

setup(
    name="qinvar",
    version="1.0.0",
    author="qinvar developers",
    description="Invariant information toolkit for qudits",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=["qinvar", "qinvar.adapters", "qinvar.adapters.files"],
    package_dir={"qinvar": "src"},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.22",
        "scipy>=1.8",
    ],
    extras_require={
        "excel": ["openpyxl>=3.1.0"],
        "dev": [
            "pytest>=8.0.0",
            "pytest-cov>=4.1.0",
            "openpyxl>=3.1.0",
            "black>=23.0.0",
            "flake8>=6.0.0",
            "mypy>=1.0.0",
        ],
    },
    entry_points={"console_scripts": ["qinvar=qinvar.cli:main"]},
    keywords="quantum-information mutually-unbiased-bases entanglement decoherence",
    include_package_data=True,
)
