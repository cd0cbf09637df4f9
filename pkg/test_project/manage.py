#!/usr/bin/env python
"""Django entry point for the kgraph test project (tests, checks)."""

from __future__ import unicode_literals

import os
import sys

from django.core.management import execute_from_command_line

if __name__ == "__main__":
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "test_project.settings")
    execute_from_command_line(sys.argv)
