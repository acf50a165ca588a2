"""Exact Grothendieck-Witt classes over fields and finite etale algebras.

The package computes with symmetric bilinear forms in exact arithmetic:
diagonalization with congruence witnesses, trace transfers along etale
algebras, complete classification over the supported base fields, unstable
classes carrying a determinant scalar, and global and local unstable degrees
of pointed rational functions together with their divisorial sum.
"""

from .errors import (
    DiagonalizationError,
    FieldMismatchError,
    GwdegError,
    InputSyntaxError,
    MathDomainError,
    UnsupportedOperationError,
)
from .fields import CC, GF, QQ, RR, FieldKind, FieldSpec, Scalar
from .poly import (
    Polynomial,
    poly_gcd,
    poly_gcdex,
    resultant,
    root_multiplicity,
)
from .numbertheory import (
    INF_PLACE,
    SquareClass,
    hilbert_symbol,
    is_square,
    legendre_symbol,
    reduce_square_class,
)
from .etale import (
    AlgebraElement,
    EtaleAlgebra,
    is_unit,
    make_etale_algebra,
    multiplication_matrix,
    trace,
    trace_form,
)
from .gw import (
    GrothendieckWittClass,
    add_gw,
    get_diagonal_class,
    gram_determinant,
    make_gw_class,
    multiply_gw,
    transfer_gw,
    transfer_gw_entrywise,
    zero_gw,
)
from .classify import (
    FormInvariants,
    WittDecomposition,
    get_invariants,
    get_witt_decomposition,
    is_isomorphic_gw,
)
from .unstable import (
    UnstableGWClass,
    add_gwu,
    add_gwu_divisorial,
    get_sum_decomposition_gwu,
    is_isomorphic_gwu,
    make_diagonal_unstable_form,
    make_gwu,
    make_hyperbolic_unstable_form,
)
from .degrees import (
    PointedRationalFunction,
    bezoutian_matrix,
    check_poincare_hopf,
    global_unstable_degree,
    local_newton_coefficient,
    local_unstable_degree,
    make_pointed,
    make_pointed_from_fraction,
)

__version__ = "0.1.0"
