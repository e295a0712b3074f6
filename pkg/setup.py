from setuptools import setup

setup(
    name="isotile",
    description="Isohedral polyomino and polyiamond tilings with 3-, 4- and 6-fold symmetry",
    version="1.0.0",
    packages=[
        "isotile",
        "isotile.model",
        "isotile.enumerator",
        "isotile.symmetry",
        "isotile.rendering",
    ],
    install_requires=[
        "matplotlib>=3.5.0",
        "pandas>=1.5.0",
        "numpy>=2.0.0",
        "scikit-learn>=1.0",
        "joblib>=0.13.2",
        "tqdm>=4.64.0",
        "pyyaml>=5.4.1",
    ],
    extras_require={
        "dev": ["black", "pre-commit", "pytest", "pytest-cov", "ruff>=0.4.8"],
    },
    entry_points={
        "console_scripts": ["isotile=isotile.cli:main"],
    },
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
)
