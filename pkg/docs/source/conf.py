# Sphinx configuration for the kronroot documentation.
import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'kronroot'
copyright = u'2026, The kronroot developers'
version = '0.1'
release = '0.1.0'

autodoc_member_order = 'bysource'

pygments_style = 'sphinx'
html_theme = 'default'
htmlhelp_basename = 'kronrootdoc'

man_pages = [
    ('index', 'kronroot', u'kronroot Documentation',
     [u'The kronroot developers'], 1)
]
