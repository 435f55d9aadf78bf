import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("SUPERHOMOLOGY_NO_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "superhomology.ranklin._elim_cy",
                    ["src/superhomology/ranklin/_elim_cy.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: the pure-Python elimination kernel is used instead.
        extensions = []

setup(ext_modules=extensions)
