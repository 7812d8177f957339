# Sphinx configuration for the pydseq documentation.
#
# Build with:  sphinx-build -b html docs docs/_build/html

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "pydseq"
copyright = "2026, pydseq contributors"
version = "0.1"
release = "0.1"

exclude_patterns = ["_build"]
pygments_style = "sphinx"

autodoc_member_order = "bysource"

html_theme = "default"
htmlhelp_basename = "pydseqdoc"

man_pages = [("index", "pydseq", "pydseq Documentation", ["pydseq contributors"], 1)]
