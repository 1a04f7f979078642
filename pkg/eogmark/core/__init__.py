"""Core module for eogmark."""
