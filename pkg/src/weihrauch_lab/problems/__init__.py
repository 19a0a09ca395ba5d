"""Problems as multi-valued relations: inputs, certificates, checkers, solvers."""

from .certificates import (AllZero, CertificateError, EmbedsAt, Finite, FirstNonzero, FirstZero,
                           HatOf, KnownAnswer, KnownColoring, NoEmbedding, NoZero, PathGen,
                           certificate_from_description, describe_certificate, lazy_hat_of)
from .ids import (BASE_NAMES, D, GC, LG, LLPO, LPO, RC, S, S_L, S_VEC_L, SF, TC, WF, WKL, Hat,
                  ProblemId, WKLn)
from .instances import (HatPayload, HatSolution, Instance, ShapeError, check_payload_shape,
                        check_solution_shape, describe_payload, describe_solution, hat_from_oracle,
                        hat_lazy, hat_pack, hat_row, hat_solution, lazy_hat_solution)
from .linear import linear_graph, linear_prefix, tagged_linear, tagged_prefix, tagged_ray_vertex
from .semantics import (NoSolution, check_certificate, check_input, check_solution, first_nonzero,
                        first_zero, solve_certified)
