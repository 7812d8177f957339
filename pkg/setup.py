#!/usr/bin/env python
# metadata lives in pyproject.toml; kept for editable installs on old pip
from setuptools import setup

setup()
