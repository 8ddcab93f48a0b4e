"""Exact tools for modulo-t Capparelli-type partition identities: families, enumeration, the bijection, jagged partitions and q-series checks."""
