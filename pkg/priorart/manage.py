#!/usr/bin/env python
"""Command-line utility for the prior art search experiments."""
import sys


def main():
    """Run a priorart subcommand."""
    from priorart.cli import main as run_command
    sys.exit(run_command(sys.argv[1:]))


if __name__ == '__main__':
    main()
