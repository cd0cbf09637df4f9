# -*- coding: utf-8 -*-
#
# kgraph documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

from __future__ import unicode_literals

import os

# -- General configuration -----------------------------------------------------

extensions = [
    "sphinx.ext.mathjax",
]

templates_path = [".templates"]
source_suffix = ".rst"
master_doc = "index"

project = "kgraph"
copyright = "2026, the kgraph developers"  # NOQA:A001

version = "0.1"
release = "0.1.0"

exclude_patterns = [".build"]
pygments_style = "sphinx"

# -- Options for HTML output ---------------------------------------------------

on_rtd = os.environ.get("READTHEDOCS", None) == "True"
if on_rtd:
    html_theme = "default"
else:
    html_theme = "nature"

htmlhelp_basename = "kgraphdoc"

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
    ("index", "kgraph.tex", "kgraph Documentation",
     "the kgraph developers", "manual"),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ("index", "kgraph", "kgraph Documentation",
     ["the kgraph developers"], 1)
]
