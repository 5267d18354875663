# Sphinx configuration for the navesolve documentation
#
# Build with `make html` from docs/ after `pip install .[docs]`.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

import navesolve  # noqa: E402


# -- Project information -----------------------------------------------------

project = 'navesolve'
copyright = '2026, navesolve developers'
author = 'navesolve developers'

release = navesolve.__version__
version = '.'.join(release.split('.')[:2])


# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.mathjax',
              'numpydoc',
              'sphinx.ext.autosummary',
              'sphinx.ext.intersphinx'
              ]

autosummary_generate = True
autodoc_default_options = {'members': True}
# members are listed by autosummary
numpydoc_show_class_members = False

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
}

templates_path = ['_templates']
exclude_patterns = []


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinxdoc'
html_title = 'navesolve %s' % release
html_static_path = ['_static']
