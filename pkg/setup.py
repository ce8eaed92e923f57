from setuptools import setup, find_packages

setup(
    name="cliffordix",
    version="1.0.0",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "pyyaml>=6.0",
        "tqdm>=4.60.0",
        "loguru>=0.6.0",
        "tabulate>=0.9.0",
    ],
    extras_require={
        "test": ["pytest>=7.0"],
    },
    entry_points={
        "console_scripts": [
            "cliffordix=cliffordix.run:main",
        ],
    },
    description="Exact gonality sequences and higher Clifford indices of algebraic curves",
    keywords="algebraic curves, Clifford index, gonality, vector bundles",
    python_requires=">=3.8",
)
