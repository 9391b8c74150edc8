# Configuration file for the Sphinx documentation builder.
# http://www.sphinx-doc.org/en/master/config

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import sphinx_rtd_theme  # noqa: E402,F401

project = 'macc'
copyright = '2019, macc contributors'
author = 'macc contributors'

release = '0.1.0'

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.napoleon', 'recommonmark', 'sphinx.ext.viewcode', 'sphinx_rtd_theme']

napoleon_include_init_with_doc = True

# the package itself is imported, its numeric stack is not
autodoc_mock_imports = ['numpy', 'pandas', 'scipy', 'tqdm']

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

html_theme = "sphinx_rtd_theme"
html_static_path = []
