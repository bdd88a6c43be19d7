#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages


def read_requirements(file_name):
    """Reads the requirements of a requirements file, skipping blank lines and comments."""
    with open(file_name) as requirements_file:
        return [line.strip() for line in requirements_file if line.strip() and not line.startswith('#')]


requirements = read_requirements('requirements.txt')
test_requirements = read_requirements('dev-requirements.txt')

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')
version = open('.VERSION').read().strip()

setup(
    name='''asmkey''',
    version=version,
    description='''Southwest keys, monotone triangles and key-avoidance enumeration of alternating sign matrices.''',
    long_description=readme + '\n\n' + history,
    author='''Costas Tyfoxylos''',
    author_email='''ctyfoxylos@schubergphilis.com''',
    url='''https://github.com/schubergphilis/asmkey.git''',
    packages=find_packages(where='.', exclude=('tests', 'hooks', '_CI*')),
    package_dir={'''asmkey''': '''asmkey'''},
    package_data={'''asmkey''': ['data/*.json', '.VERSION']},
    include_package_data=True,
    install_requires=requirements,
    python_requires='>=3.9',
    license='MIT',
    zip_safe=False,
    keywords='''asmkey alternating sign matrix permutation pattern avoidance monotone triangle catalan''',
    entry_points={
        'console_scripts': [
            'asm-key = asmkey.asmkey:asm_key'
        ]},
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    test_suite='tests',
    tests_require=test_requirements
)
