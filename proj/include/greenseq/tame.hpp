#pragma once

#include <vector>

#include "greenseq/search.hpp"

namespace greenseq {

/*
 * Affine-type toolkit.  An Euler form is accepted as tame when E + E^t has
 * corank exactly 1 with a primitive, entrywise positive kernel generator eta
 * (the null root).  tau = -E^-1 E^t is the Coxeter transformation; it fixes
 * eta and sends dim P_i to -dim I_i.
 */
struct TameData {
    DimVector eta;
    Mat tau;
    Mat tau_inv;
};

/* Throws NotTame (finite or wild symmetrized form, or non-positive kernel). */
TameData compute_tame_data(const EulerData& ed);

/* <x, eta> = x^t E eta: positive on preprojectives, zero on regulars,
 * negative on preinjectives. */
i64 defect_pairing(const TameData& td, const EulerData& ed, const DimVector& x);

enum class ComponentClass { P, R, J };

ComponentClass classify_component(const TameData& td, const EulerData& ed, const DimVector& x);

/* At least one P and at least one J column among dims_from_seed. */
bool is_regular_cluster(const TameData& td, const EulerData& ed, const Seed& s);

/* Number of R columns; throws TooManyRegulars above n - 2. */
int regular_component_count(const TameData& td, const EulerData& ed, const Seed& s);

struct RegularClusterGraph {
    std::vector<CanonicalSeed> nodes;
    std::vector<std::pair<int, int>> edges; /* undirected, i < j, sorted */
    bool connected = true;
};

/*
 * Regular clusters collected over every trail of the report, with an edge
 * between clusters one mutation apart.  Strict mode insists on a complete
 * enumeration (IncompleteSearch); best-effort mode works with what was found.
 */
RegularClusterGraph regular_cluster_graph(const TameData& td, const EulerData& ed,
                                          const SearchReport& report, bool require_complete = true);

struct Projection {
    std::vector<int> j_set;    /* vertices that received a correction, ascending, 1-based */
    std::vector<i64> coeffs;   /* positive coefficients aligned with j_set */
    DimVector y;               /* x + sum coeff_j * dim P_j, entrywise >= 0 */
};

/* Greedy top-down correction along a triangular vertex order; y_j = 0 on j_set. */
Projection project_to_nonnegative(const EulerData& ed, const DimVector& x);

/* Smallest k <= bound with tau^-k x having a negative entry; throws BoundExceeded. */
int find_negative_iterate(const TameData& td, const DimVector& x, int bound);

}  // namespace greenseq
