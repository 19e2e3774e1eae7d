"""Graph kernel, invariants, spectral tools and verifiers."""
