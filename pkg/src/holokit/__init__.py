"""Exact toolkit for totally reducible holonomy algebras."""
