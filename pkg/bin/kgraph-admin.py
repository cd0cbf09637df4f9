#!/usr/bin/env python
# coding: utf-8

from __future__ import unicode_literals

from kgraph.core.commands import handle_command_line

if __name__ == "__main__":
    handle_command_line()
