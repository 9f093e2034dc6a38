#!/usr/bin/env python
# coding: utf-8

import sys

from .src.cli import main


sys.exit(main())
