#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Sublab documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

from sublab import __version__

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'Sublab'
copyright = '2026, Sublab developers'
author = 'Sublab developers'

version = __version__
release = __version__

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

html_static_path = []

htmlhelp_basename = 'Sublabdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  (master_doc, 'Sublab.tex', 'Sublab Documentation',
   author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'sublab', 'Sublab Documentation',
     [author], 1)
]
