#!/usr/bin/env python
"""Entry point for the orbit engine: `python manage.py <command>` (roots, orbit, decompose, ...)."""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'orbit_project.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. The engine CLI runs as Django management "
            "commands; install engine/requirements.txt into the active environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
