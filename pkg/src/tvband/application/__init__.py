"""Computation use cases, one subpackage per area."""
