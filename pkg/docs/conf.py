# -*- coding: utf-8 -*-
#
# clusterset documentation build configuration file

import os


def get_version():
    """read version number from the package data"""
    f_version = os.path.join(os.path.dirname(__file__),
                             '..', 'clusterset', 'data', 'VERSION')
    with open(f_version, 'r') as f:
        return f.readline().strip()


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.todo',
              'sphinx.ext.mathjax',
              'sphinxarg.ext']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'clusterset'
copyright = u'2020, The clusterset developers'
author = u'The clusterset developers'

version = get_version()
release = version

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = True


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'clustersetdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'clusterset.tex', u'clusterset Documentation',
     author, 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'clusterset', u'clusterset Documentation',
     [author], 1)
]
