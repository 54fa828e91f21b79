"""Build script: compiles the optional Cython linear-algebra core.

The package is pure Python; `hecke_bz._linalg_cy` is a drop-in compiled
variant of `hecke_bz._linalg_py` that `hecke_bz.linalg` picks up at import
time when present.  Any failure here (no Cython, no C compiler) must not
break installation, so the extension is attempted and then abandoned.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hecke_bz._linalg_cy", ["src/hecke_bz/_linalg_cy.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"hecke-bz: skipping compiled linalg core ({exc!r}); "
          "the pure-Python backend will be used")

setup(ext_modules=ext_modules)
