"""Contact Rigidity Lab - numerical contact Hamiltonian dynamics."""

__version__ = "1.0.0"
