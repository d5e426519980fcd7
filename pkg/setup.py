#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
import io
from setuptools import setup, find_packages


def get_version():
    """read version number from file"""
    ROOT = os.path.dirname(__file__)
    F_VERSION = os.path.join(ROOT, 'clusterset', 'data', 'VERSION')
    with io.open(F_VERSION, 'r') as f:
        return f.readline().strip()


def get_long_description():
    with io.open('README.rst', 'r',  encoding='utf-8') as f:
        long_description = f.read()
    idx = max(0, long_description.find(u"clusterset is"))
    return long_description[idx:]


ENTRY_POINTS = {'console_scripts': ['clusterset=clusterset.clusterset:main', ], }


CLASSIFIERS = ["Development Status :: 4 - Beta",
               "Environment :: Console",
               "Intended Audience :: Science/Research",
               "License :: OSI Approved :: GNU General Public License v2 or later (GPLv2+)",
               "Operating System :: OS Independent",
               "Programming Language :: Python",
               "Programming Language :: Python :: 3.8",
               "Programming Language :: Python :: 3.9",
               "Topic :: Scientific/Engineering :: Mathematics"]


DESCR = "Decision and certification of cluster consensus for switched averaging"


REQUIRES = ['numpy >= 1.17', 'networkx >= 2.4', 'pyinstrument']

TESTS_REQUIRE = ['pytest', 'pytest-cov', 'hypothesis', 'pandas']


metadata = dict(name='clusterset',
                version=get_version(),
                description=DESCR,
                long_description=get_long_description(),
                license='GPLv2',
                classifiers=CLASSIFIERS,
                keywords='science consensus stochastic matrices',
                packages=find_packages(exclude=['tests']),
                install_requires=REQUIRES,
                extras_require={'tests': TESTS_REQUIRE},
                python_requires='>=3.8',
                package_data={'clusterset': ['data/VERSION', 'data/example.ini',
                                             'data/fixtures/*.json']},
                include_package_data=True,
                entry_points=ENTRY_POINTS,
                )


setup(**metadata)
