#ifndef ADDSET_SERIALIZATION_HPP
#define ADDSET_SERIALIZATION_HPP

#include <string>

#include <json.hpp>

#include "addset/constructions.hpp"
#include "addset/search.hpp"
#include "addset/verify.hpp"

namespace addset {

using json = nlohmann::ordered_json;

json to_json(const LengthSet& s);

/// [[atom, exponent], ...] with zero exponents omitted, atoms ascending.
json to_json(const Factorization& f, const std::vector<int64_t>& atoms);

/// {construction, params, atoms, x, sigma}
json to_json(const Realization& r);

json to_json(const VerificationReport& rep);

/// {atoms, x, as, genus}
json to_json(const CatalogEntry& e);

/// "21 = 10 + 11", "147 = 3*36 + 39" — addends ascending by atom.
std::string factorization_line(int64_t x, const Factorization& f,
                               const std::vector<int64_t>& atoms);

/// "n=3 k=7"
std::string params_line(const Params& params);

}  // namespace addset

#endif  // ADDSET_SERIALIZATION_HPP
