#!/usr/bin/env python
"""Entry point of the experiment commands: python manage.py <command> [flags]."""
import os
import sys


def main():
    """Run an experiment or any Django administrative task."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the packages from "
            "requirements.txt into the active environment first."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
