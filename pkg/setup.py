from setuptools import setup
import pathlib

root = pathlib.Path(__file__).parent.resolve()

LONG_DESCRIPTION = (root / "README.rst").read_text(
    encoding="utf-8")

setup(
    name="sctx",
    version="0.3.0",
    description="Exact simplicial distributions, contextuality and Bell inequalities on cones and suspensions.",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/x-rst",
    author="the sctx contributors",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Programming Language :: Python :: 3",
    ],
    keywords="contextuality, simplicial sets, polytopes, bell inequalities",
    packages=['sctx'],
    python_requires=">=3.8, <4",
    install_requires=[],
    extras_require={
        "test": ["pytest", "tox"],
    },
    package_data={
        'sctx': [
            'resources/scenarios/*.json',
            'resources/dists/*.json',
            'resources/families/*.json',
            'resources/collections/*.json',
        ]
    },
    entry_points={
        "console_scripts": [
            "sctx=sctx.__main__:run",
        ],
    },
)
