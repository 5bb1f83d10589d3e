"""bakerkp: Baker's hyperelliptic functions on symmetric products, exactly.

The library constructs the P-matrix and Weierstrass-Klein p-matrix of a
hyperelliptic curve directly from a degree-g divisor, flows divisors along
Jacobian derivations as truncated jets, and verifies by exact arithmetic that
the resulting functions solve the KP-I and KP-II equations together with the
classical polynomial identities relating them.
"""

__version__ = "0.1.0"
