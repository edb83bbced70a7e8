"""Cohomology jump loci of bounded free complexes over Laurent polynomial rings."""

from .caps import Caps, default_caps
from .chaincx import (FreeComplex, GroupPresentation, fox_complex, koszul_torus, load, loads,
                      point_complex, save, shift, surface, tensor_product, twist, wedge)
from .errors import (ComplexConditionViolated, DomainError, ExactDivisionError, NotATorusPoint,
                     ParseError, ResourceLimitExceeded, RingMismatchError, SchemaError,
                     ShapeMismatch, TorusJumpError, UnsupportedExtension, UnsupportedPresentation)
from .galois import GaloisField, GFElement
from .groebner import (DimensionResult, Ideal, dimension, groebner_basis, ideal_membership,
                       ideal_product, ideal_sum, radical_membership, same_variety, saturate,
                       variety_containment)
from .jumploci import (JumpLocusSet, LocusRecord, euler_characteristic, fitting_ideal,
                       jump_loci, jumping_ideal, membership)
from .polymat import PolyMatrix, block_diagonal, determinantal_ideal, rank
from .ring import (DEGREVLEX, LEX, QQ, ZZ, CoefficientDomain, Elimination, Fp, LaurentRing,
                   MonomialOrder, Polynomial, evaluate, parse_polynomial)
from .verify import (DualityVerdict, FiberBetti, IndexingMode, VerificationReport,
                     acyclic_off_top, betti_bounds, duality_check, fiber_betti, oracle_check,
                     sample_points, smith_normal_form, verify_components, verify_propagation)

__version__ = "0.1.0"
