"""Exact computer algebra for quantum groups, q-boson modules, and quiver
Hecke (KLR) algebras over Q(q).

Subpackage layout:

* ``scalars``   -- Laurent polynomials, the field Q(q), graded series
* ``rootdata``  -- Cartan data, roots, weights, Weyl words
* ``uqminus``   -- the negative half U_q^-(g) as words modulo the Gram radical
* ``uqfull``    -- triangular elements of U_q(g), braid operators T_i
* ``braidsym``  -- adjoint operators, U_i / _iU, bimodule verification
* ``parabolic`` -- parabolic highest-weight modules V_J(Lambda)
* ``klr``       -- quiver Hecke algebras R(beta), normal forms, idempotents
* ``klrchar``   -- graded characters and the reflection-functor identity
* ``cli``       -- command-line verification suites
"""

__version__ = "0.1.0"
