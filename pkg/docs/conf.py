# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import hallbridge  # noqa: E402

# -- Project information -----------------------------------------------------

project = "hallbridge"
copyright = "2024, hallbridge developers"
author = "hallbridge developers"

version = hallbridge.__version__
release = hallbridge.__version__
package = hallbridge.__name__

# -- General configuration ---------------------------------------------------

needs_sphinx = "2.0"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.autosummary",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "myst_parser",
    "numpydoc",
    "sphinxarg.ext",
    "sphinx_copybutton",
]

numpydoc_show_class_members = False
autoclass_content = "class"

source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}

language = "en"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

nitpicky = False

suppress_warnings = ["config.cache"]

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
html_show_sourcelink = False
html_show_sphinx = False

htmlhelp_basename = "hallbridge"

# -- intersphinx -------------------------------------------------------------
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}
intersphinx_timeout = 5

# -- autosectionlabels -------------------------------------------------------
autosectionlabel_prefix_document = True

# -- numpydoc ----------------------------------------------------------------
numpydoc_class_members_toctree = False
numpydoc_attributes_as_param_list = False

numpydoc_xref_param_type = True
numpydoc_xref_aliases = {
    "array": "numpy.ndarray",
    "bool": ":class:`python:bool`",
    "HallLab": "hallbridge.objects.HallLab",
    "HallContext": "hallbridge.operations.hall.HallContext",
    "TCoeff": "hallbridge.operations.ffalg.TCoeff",
    "Representation": "hallbridge.operations.modcat.Representation",
}
numpydoc_xref_ignore = {
    "of",
    "optional",
    "or",
    "shape",
}
