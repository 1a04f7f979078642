"""Tests for eogmark."""
