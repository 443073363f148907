#!/usr/bin/env python3
"""
Comical engine
Command-line entry point
"""

from dotenv import load_dotenv

load_dotenv()

from comical.cli import cli  # noqa: E402

if __name__ == '__main__':
    cli()
