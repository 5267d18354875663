import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="navesolve",
    version="0.1.0",
    author="navesolve developers",
    description="Smoothing Newton solvers for nonlinear absolute value equations",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "examples*"]),
    install_requires=[
        "numpy>=1.17",
        "scipy",
        "pandas",
        "scikit-learn",
        "statsmodels",
        "joblib",
        "tabulate",
    ],
    extras_require={
        "test": ["pytest"],
        "docs": ["sphinx", "numpydoc"],
    },
    entry_points={
        "console_scripts": ["navesolve=navesolve.harness.cli:main"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.7',
)
