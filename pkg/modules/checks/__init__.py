"""Consistency checks across pipelines (balancing, specialization, product rule, nilpotency)."""

from .checker import ConsistencyChecker
