#include "addset/serialization.hpp"

#include <sstream>

namespace addset {

json to_json(const LengthSet& s) { return json(s.values()); }

json to_json(const Factorization& f, const std::vector<int64_t>& atoms) {
    json out = json::array();
    for (const auto& [atom, exp] : f.atom_powers(atoms))
        out.push_back(json::array({atom, exp}));
    return out;
}

json to_json(const Realization& r) {
    json params = json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    return json{{"construction", construction_name(r.construction)},
                {"params", params},
                {"atoms", r.semigroup.atoms()},
                {"x", r.element},
                {"sigma", r.target.values()}};
}

json to_json(const VerificationReport& rep) {
    json out = to_json(rep.subject);
    out["computed_as"] = rep.computed_as.values();
    out["expected_as"] = rep.expected_as.values();
    out["atoms_minimal"] = rep.atoms_minimal;
    out["count"] = rep.factorization_count;
    if (rep.expected_count) out["expected_count"] = *rep.expected_count;
    out["verdict"] = rep.passed() ? "pass" : "fail";
    out["details"] = rep.details;
    return out;
}

json to_json(const CatalogEntry& e) {
    return json{{"atoms", e.semigroup.atoms()},
                {"x", e.element},
                {"as", e.as_set.values()},
                {"genus", e.semigroup.genus()}};
}

std::string factorization_line(int64_t x, const Factorization& f,
                               const std::vector<int64_t>& atoms) {
    std::ostringstream os;
    os << x << " = ";
    bool first = true;
    for (const auto& [atom, exp] : f.atom_powers(atoms)) {
        if (!first) os << " + ";
        first = false;
        if (exp != 1) os << exp << '*';
        os << atom;
    }
    return os.str();
}

std::string params_line(const Params& params) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : params) {
        if (!first) os << ' ';
        first = false;
        os << name << '=' << value;
    }
    return os.str();
}

}  // namespace addset
