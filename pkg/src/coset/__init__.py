"""coset: a benchmark toolkit for program classifiers.

Small imperative language (MiniLang) with a tracing interpreter, a
suite of semantics-preserving/approximating/changing source transforms
verified by differential execution, a labeled corpus generator, a
classifier evaluation harness, and a misclassification debugger.
"""

__version__ = "0.1.0"
