"""End-to-end tests for eogmark."""
