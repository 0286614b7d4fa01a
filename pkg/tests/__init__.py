"""Test suite for the Steinberg toolkit."""
