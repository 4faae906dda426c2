# Sphinx configuration of the StiefelNorm documentation.

import os
import sys
sys.path.insert(0,os.path.abspath('../..'))

extensions=['sphinx.ext.autodoc','sphinx.ext.napoleon','sphinx.ext.mathjax','sphinx.ext.viewcode']

# The docstrings are in the numpy style.
napoleon_google_docstring=False
napoleon_numpy_docstring=True
napoleon_use_admonition_for_notes=True
napoleon_use_ivar=True
autoclass_content='both'

master_doc='index'
project='StiefelNorm'
author='StiefelNorm developers'
version=release='1.0.0'

html_theme='classic'
html_sidebars={'**':['globaltoc.html','relations.html','sourcelink.html','searchbox.html']}
