"""Setup script for the bvcheck package."""
from setuptools import setup, find_packages

setup(
    name="bvcheck",
    version="0.1",
    packages=find_packages(exclude=["examples", "examples.*"]),
    package_data={"cli": ["report.schema.json"]},
    install_requires=[
        "sympy>=1.9",
        "jsonschema>=4.0",
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["bvcheck=cli.main:main"],
    },
    python_requires=">=3.8",
)
