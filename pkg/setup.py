"""setup.py for tracedyn.

This is a shim left here for compatibility reasons.
"""

from setuptools import setup

setup(version="0.1.0")
