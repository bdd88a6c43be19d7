#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# asmkey documentation build configuration file, created by
# sphinx-quickstart
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Run apidoc to traverse the project directory and add all modules to the docs
import sphinx.ext.apidoc

sphinx.ext.apidoc.main(argv=['-f', '-o', os.path.join(project_root, 'docs'),
                             os.path.join(project_root, '''asmkey''')])

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import asmkey

# -- General configuration ---------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon'
]

napoleon_google_docstring = True

source_suffix = '.rst'
master_doc = 'index'

project = u'''asmkey'''
copyright = u'''2026, (Author : Costas Tyfoxylos)'''

# The short X.Y version and the full version, including alpha/beta/rc tags.
version = asmkey.__version__
release = asmkey.__version__

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = '''asmkeydoc'''
