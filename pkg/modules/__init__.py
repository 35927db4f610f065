"""Exact chi_y-genera and refined tropicalizations of generic complete intersections in tori."""
