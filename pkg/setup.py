#!/usr/bin/env python

from setuptools import setup

long_description = """
Qinfo computes Brukner-Zeilinger style quantum information measures for
density matrices: total information, classical information and the surplus
knowledge carried by off-diagonal coherences.

Comes with a command line tool for inspecting state spec files, running
the built-in thought experiments and random phase decoherence sweeps.
"""

setup(
    name='qinfo',
    version='0.1.0',
    description='Quantum information measures for density matrices',
    long_description=long_description.strip(),
    url='https://github.com/qinfo-project/qinfo/',
    project_urls={
        'Issue tracker': 'https://github.com/qinfo-project/qinfo/issues/',
    },
    keywords='quantum information density matrix',
    license='GPLv3',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    packages=['qinfo'],
    python_requires=">=3.6",
    install_requires=[
        "numpy>=1.17",
        "wcwidth>=0.1.7",
    ],
    entry_points={
        'console_scripts': [
            'qinfo=qinfo.console:main',
        ],
    }
)
