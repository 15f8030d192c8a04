#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2026 logmonoid developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Setup for logmonoid.
"""
from setuptools import setup, find_packages

from logmonoid.version import __version__

description = 'Exact monoid algebra for stable log maps'

try:
    with open('./README.md', 'r') as fd:
        long_description = fd.read()
except IOError:
    long_description = ''


NAME = "logmonoid"

setup(name=NAME,
      version=__version__,
      description=description,
      author='logmonoid developers',
      classifiers=["Development Status :: 3 - Alpha",
                   "Intended Audience :: Science/Research",
                   "License :: OSI Approved :: GNU General Public License v3 " +
                   "or later (GPLv3+)",
                   "Operating System :: OS Independent",
                   "Programming Language :: Python",
                   "Topic :: Scientific/Engineering :: Mathematics"],
      long_description=long_description,
      long_description_content_type='text/markdown',
      license='GPLv3',
      packages=find_packages(),
      scripts=['bin/logmonoid.py', ],
      data_files=[('share/logmonoid/schemas', ['schemas/graph.schema.json', 'schemas/slb.schema.json'])],
      install_requires=['numpy', 'sympy', 'networkx', 'pydantic>=2', 'pyyaml', ],
      extras_require={'test': ['pytest', 'pytest-cov']},
      python_requires='>=3.8',
      zip_safe=False,
      )
