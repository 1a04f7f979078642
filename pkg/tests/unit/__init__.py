"""Unit tests for eogmark."""
