"""Defeasible inheritance nets."""
