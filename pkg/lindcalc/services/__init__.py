"""Computational services: labels, the character oracle, branching, order,
tensor modules, duals and injective hulls, and direct-limit descriptors."""
