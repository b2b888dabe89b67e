# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a
# full list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import sphinx_rtd_theme

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# Mock imports for autodoc

autodoc_mock_imports = [ 'yaml', 'pytest' ]

# -- Project information -----------------------------------------------------

project = 'janet'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx_rtd_theme',
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
  ]

# Napoleon settings

napoleon_google_docstring = True
napoleon_numpy_docstring = False

templates_path = []
exclude_patterns = []

master_doc = 'index'

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
