"""Syzygy degrees on Fermat curves over prime fields and the density of primes
where Syz(X^2, Y^2, Z^2) fails to be strongly semistable."""

__version__ = "0.1.0"
