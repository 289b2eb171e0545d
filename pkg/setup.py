#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

import os
import re
import io

here = os.path.abspath(os.path.dirname(__file__))

with io.open(os.path.join(here, 'README.rst'), encoding='utf-8') as f:
    readme = f.read()

with io.open(os.path.join(here, 'HISTORY.rst'), encoding='utf-8') as f:
    history = f.read()

install_requires = ['numpy>=1.21', 'rebulk>=3.0', 'python-dateutil>=2.8', 'tomli>=1.1; python_version < "3.11"']
setup_requires = ['pytest-runner']

dev_require = ['zest.releaser[recommended]', 'pylint', 'tox', 'sphinx', 'sphinx-autobuild']

tests_require = ['pytest>=6.0', 'pytest-benchmark', 'hypothesis>=6.0', 'PyYAML']

entry_points = {
    'console_scripts': [
        'sublab = sublab.__main__:main'
    ],
}

with io.open('sublab/__version__.py', 'r') as f:
    version = re.search(r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]$', f.read(), re.MULTILINE).group(1)

args = dict(name='sublab',
            version=version,
            description='Sublab - numerical checks of harmonic and biharmonic maps and Riemannian submersions.',
            long_description=readme + '\n\n' + history,
            # Get strings from http://pypi.python.org/pypi?%3Aaction=list_classifiers
            classifiers=['Development Status :: 3 - Alpha',
                         'License :: OSI Approved :: GNU Library or Lesser General Public License (LGPL)',
                         'Operating System :: OS Independent',
                         'Intended Audience :: Science/Research',
                         'Programming Language :: Python :: 3',
                         'Programming Language :: Python :: 3.8',
                         'Programming Language :: Python :: 3.9',
                         'Programming Language :: Python :: 3.10',
                         'Programming Language :: Python :: 3.11',
                         'Programming Language :: Python :: 3.12',
                         'Topic :: Scientific/Engineering :: Mathematics',
                         'Topic :: Software Development :: Libraries :: Python Modules'
                         ],
            keywords='differential geometry riemannian submersion harmonic biharmonic map tension jets',
            license='LGPLv3',
            packages=find_packages(exclude=['examples', 'examples.*']),
            include_package_data=True,
            python_requires='>=3.8',
            install_requires=install_requires,
            setup_requires=setup_requires,
            tests_require=tests_require,
            entry_points=entry_points,
            test_suite='sublab.test',
            zip_safe=True,
            extras_require={
                'test': tests_require,
                'dev': dev_require,
            })

setup(**args)
