"""Exact computations with monodromy tuples on the punctured projective line:
rigidity tests, moduli coordinates, residue bookkeeping, Galois transport, and
torsion-subtorus calculus, all over cyclotomic fields."""

from .cyclotomic import (CycNum, GaloisElement, cyclotomic_polynomial, euler_phi,
                         galois_apply, galois_group, one, rational, root_of_unity_order,
                         sort_key, unit_exp, unit_log, zero, zeta)
from .galois import (AbsoluteVerdict, absolute_point_test, conjugate_eigen,
                     conjugate_tuple_naive, galois_orbit_eigen, transport_residues)
from .linalg import Matrix, Polynomial, charpoly, eigenvalues_split, rank_and_kernel_dim
from .moduli import (ComponentSpec, TraceChartPoint, all_component_specs,
                     component_membership, construct_representative, nonsimple_test_s3,
                     trace_chart)
from .monodromy import (EigenData, MonData, MonodromyTuple, Rank2Classification,
                        RigidityReport, centralizer_dim, common_eigenvector_exists,
                        det_data, is_irreducible, katz_report, mon, rank2_classify,
                        scalar_points)
from .residues import (CurveGeometry, FuchsDegree, ResidueData, deligne_residues,
                       exp_residues, fuchs_degree, hilbert_poly)
from .tori import (TorsionCoset, TorusFormula, coset_intersect, coset_membership,
                   enumerate_torsion, formula_eval, monomial_preimage,
                   nonsimple_locus_formula, residue_vector, smith_normal_form)

__version__ = "0.1.0"
