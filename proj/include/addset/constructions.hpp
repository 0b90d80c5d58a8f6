#ifndef ADDSET_CONSTRUCTIONS_HPP
#define ADDSET_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "addset/core.hpp"
#include "addset/factorization.hpp"

namespace addset {

/// The five parametric families that realize a prescribed length set of
/// at most three elements.
enum class Construction {
    singleton,        // <2, 2n-1>, x = 2n, realizes {n}
    pair_with_two,    // <k, k+n, kn-(k+n)>, x = kn, realizes {2, n}
    pair_general,     // <tn^2, tn^2+n, t^2n+1>, x = t^2n^2+n, realizes {n, t}
    triple_with_two,  // five generators, x = t^2n^2+n, realizes {2, n, t}
    triple_general,   // scaled by r, x = r(t^2n^2+n), realizes {r+1, n, t}
};

std::string_view construction_name(Construction c);
std::optional<Construction> construction_from_name(std::string_view name);

/// Named construction parameters in their natural order (r, n, k, t as
/// applicable). A vector of pairs keeps serialization order deterministic.
using Params = std::vector<std::pair<std::string, int64_t>>;

/// Parameter names of a construction, in sweep order.
const std::vector<std::string>& construction_params(Construction c);

/// A realized target: the semigroup, the element whose addendization set
/// is the target, and the parameters that produced them.
struct Realization {
    Construction construction;
    Params params;
    NumericalSemigroup semigroup;
    int64_t element;
    LengthSet target;
};

/// The generator list of a construction exactly as written, before any
/// minimality reduction. Used by verification to confirm the list is
/// already minimal. Throws invalid_input on missing parameters.
std::vector<int64_t> construction_generators(Construction c, const Params& params);

/// Factorization count each family guarantees for its element: 2 for the
/// pair constructions, 3 for the triples, 1 for the singleton.
int64_t expected_factorization_count(Construction c);

/// {n} realized in <2, 2n-1> at x = 2n. Requires n >= 2.
Realization realize_singleton(int64_t n);

/// {2, n} realized in <k, k+n, kn-(k+n)> at x = kn. Requires n >= 3 and,
/// when given, k >= 7 with gcd(n, k) = 1; k defaults to the smallest
/// admissible value.
Realization realize_pair_with_two(int64_t n, std::optional<int64_t> k = {});

/// {n, t} realized in <tn^2, tn^2+n, t^2n+1> at x = t^2n^2+n.
/// Requires n >= 3, t >= n+1.
Realization realize_pair_general(int64_t n, int64_t t);

/// {2, n, t} realized in <tn^2, tn^2+n, t^2n+1, t^2n+n+1, t^2n^2-t^2n-1>
/// at x = t^2n^2+n. Requires n >= 3, t >= n+1.
Realization realize_triple_with_two(int64_t n, int64_t t);

/// {r+1, n, t} realized in the r-scaled five-generator semigroup at
/// x = r(t^2n^2+n). Requires r >= 1, n >= r+2, t >= n+1. r = 1 reproduces
/// the triple_with_two generators exactly.
Realization realize_triple_general(int64_t r, int64_t n, int64_t t);

/// Dispatches any target with 1 <= |target| <= 3 and entries >= 2 to the
/// matching construction. Throws unsupported_cardinality for larger
/// targets (bounded search is the tool for those), invalid_param for
/// empty targets or entries below 2.
Realization realize(const LengthSet& target);

}  // namespace addset

#endif  // ADDSET_CONSTRUCTIONS_HPP
