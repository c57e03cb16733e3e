import sphinx_rtd_theme

# -- Project information -----------------------------------------------------
project = 'blaschke'
copyright = '2026, blaschke developers'
author = 'blaschke developers'
release = '0.1.0'
version = '0.1'
language = 'en'

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autosummary",
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    'sphinx_rtd_theme',
    'sphinx_copybutton',
]

autosummary_generate = True
add_module_names = True

templates_path = ['_templates']
source_suffix = '.rst'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store', '*.md']

master_doc = 'index'
pygments_style = 'tango'

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': True,
    'sticky_navigation': False,
    'navigation_depth': 4,
    'display_version': True,
    'titles_only': False
}
html_show_sourcelink = True
html_copy_source = False

# Copy button
copybutton_prompt_text = ">>> "
