"""Exact counting of random walk labelings on graph families."""

from .errors import (BFileParseError, DisconnectedGraphError, FetchError,
                     IntegralityError, OfflineError, ParameterError, SizeLimitError)
from .exact import (RationalSeries, binomial, binomial_rational, catalan,
                    factorial, multinomial)
from .formulas import (CountReport, barbell_count, barbell_equal_count, cone_count,
                       count_report, cycle_disrupted, family_count, fan_count,
                       friendship_count, lollipop_count, one_point_union_count,
                       path_disrupted, snake3_count, snake_b, snake_count,
                       tadpole_count, wheel_count)
from .graphs import (Family, FamilySpec, Graph, export_edge_list, from_edge_list,
                     make_cone, make_family, parse_edge_list)
from .identities import (IdentityCheck, a087547_pair, a233449_terms,
                         eulerian_claim_report, hockey_stick_real, kka_identity,
                         ode_residual)
from .oracle import (DisruptedProfile, count_labelings_dp, count_labelings_from,
                     count_labelings_perm, disrupted_profile_dp,
                     enumerate_labelings_walk)

__version__ = "0.1.0"
