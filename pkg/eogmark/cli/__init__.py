"""CLI module for eogmark."""
