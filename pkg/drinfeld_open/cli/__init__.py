"""Command-line front end and self-test suite."""
