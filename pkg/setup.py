import setuptools


with open("README.md", "r") as fh:
    long_description = fh.read()


setuptools.setup(
    name = "doublepoints",
    version = "0.1.0",
    description ="Exact classification of double points of plane curves and singularity censuses of rational curves",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages = setuptools.find_packages(exclude=["tests", "examples", "examples.*"]),
    python_requires=">=3.8",
    classifiers=[
        'Development Status :: 3 - Alpha',
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=['pandas','tqdm','sympy'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['doublepoints = doublepoints.cli:main']},
)
