"""Orientably-regular embeddings of complete multigraphs K_q^(t).

Construction of the automorphism groups of all such embeddings,
computation of map invariants (type, genus, chirality, self-duality,
rotational-power orbits, Cayley structure), and independent
cross-checks via coset enumeration and a brute-force rotation-system
census.
"""

__version__ = "0.1.0"
