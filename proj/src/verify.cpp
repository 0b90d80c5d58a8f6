#include "addset/verify.hpp"

#include <algorithm>
#include <cctype>

#include "addset/factorization.hpp"

namespace addset {

VerificationReport check_realization(const Realization& r,
                                     std::optional<int64_t> expected_count) {
    VerificationReport rep{r, LengthSet{}, r.target, false, 0, expected_count,
                           Verdict::fail, {}};

    try {
        const std::vector<int64_t> claimed =
            construction_generators(r.construction, r.params);
        const NumericalSemigroup rebuilt{GeneratorSet(claimed)};
        std::vector<int64_t> sorted = claimed;
        std::sort(sorted.begin(), sorted.end());
        rep.atoms_minimal = rebuilt.atoms() == sorted;
        if (!rep.atoms_minimal)
            rep.details.push_back("claimed generators are not minimal: reduced to " +
                                  rebuilt.str());

        std::vector<int64_t> lengths;
        for_each_factorization(r.semigroup, r.element, [&](const Factorization& f) {
            ++rep.factorization_count;
            lengths.push_back(f.length());
        });
        rep.computed_as = LengthSet(std::move(lengths));
    } catch (const Error& e) {
        if (e.code() == errc::arithmetic_overflow) throw;
        rep.details.push_back(std::string("verification aborted: ") + e.what());
        return rep;
    }

    if (rep.computed_as != rep.expected_as)
        rep.details.push_back("AS mismatch: computed " + rep.computed_as.str() +
                              ", expected " + rep.expected_as.str());
    if (expected_count && rep.factorization_count != *expected_count)
        rep.details.push_back("factorization count " +
                              std::to_string(rep.factorization_count) +
                              " != expected " + std::to_string(*expected_count));

    if (rep.details.empty()) rep.verdict = Verdict::pass;
    return rep;
}

namespace {

int64_t resolve_bound(const SweepBound& b,
                      const std::vector<std::pair<std::string, int64_t>>& assigned) {
    if (b.anchor.empty()) return b.offset;
    for (const auto& [name, value] : assigned)
        if (name == b.anchor) return checked_add(value, b.offset);
    throw Error(errc::invalid_input,
                "range endpoint refers to unknown parameter '" + b.anchor + "'");
}

Realization build(Construction c, const Params& p) {
    switch (c) {
        case Construction::singleton:
            return realize_singleton(p[0].second);
        case Construction::pair_with_two:
            return realize_pair_with_two(p[0].second, p[1].second);
        case Construction::pair_general:
            return realize_pair_general(p[0].second, p[1].second);
        case Construction::triple_with_two:
            return realize_triple_with_two(p[0].second, p[1].second);
        case Construction::triple_general:
            return realize_triple_general(p[0].second, p[1].second, p[2].second);
    }
    throw Error(errc::invalid_input, "unknown construction");
}

void sweep_recurse(const SweepSpec& spec,
                   const std::vector<const SweepRange*>& ranges, size_t idx,
                   Params& assigned, SweepSummary& out) {
    const std::vector<std::string>& names = construction_params(spec.construction);
    if (idx == names.size()) {
        try {
            Realization r = build(spec.construction, assigned);
            VerificationReport rep = check_realization(
                r, expected_factorization_count(spec.construction));
            rep.passed() ? ++out.passed : ++out.failed;
            out.reports.push_back(std::move(rep));
        } catch (const Error& e) {
            if (e.code() != errc::invalid_param) throw;
            ++out.skipped;
        }
        return;
    }
    const int64_t lo = resolve_bound(ranges[idx]->lo, assigned);
    const int64_t hi = resolve_bound(ranges[idx]->hi, assigned);
    for (int64_t v = lo; v <= hi; ++v) {
        assigned.emplace_back(names[idx], v);
        sweep_recurse(spec, ranges, idx + 1, assigned, out);
        assigned.pop_back();
    }
}

}  // namespace

SweepRange parse_sweep_range(std::string_view text) {
    const auto parse_bound = [](std::string_view s) -> SweepBound {
        // optional leading parameter name, then +/- offset, or a bare integer
        size_t i = 0;
        while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) ||
                                s[i] == '_'))
            ++i;
        if (i == 0) return SweepBound{parse_int64(s), ""};
        SweepBound b{0, std::string(s.substr(0, i))};
        if (i < s.size()) {
            if (s[i] != '+' && s[i] != '-')
                throw Error(errc::invalid_input,
                            "malformed range endpoint '" + std::string(s) + "'");
            b.offset = parse_int64(s.substr(i + 1));
            if (s[i] == '-') b.offset = -b.offset;
        }
        return b;
    };

    const size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        SweepBound b = parse_bound(text);
        return SweepRange{b, b};
    }
    return SweepRange{parse_bound(text.substr(0, dots)),
                      parse_bound(text.substr(dots + 2))};
}

SweepSummary sweep_verify(const SweepSpec& spec) {
    const std::vector<std::string>& names = construction_params(spec.construction);
    std::vector<const SweepRange*> ranges;
    for (const std::string& name : names) {
        const SweepRange* found = nullptr;
        for (const auto& [key, range] : spec.ranges)
            if (key == name) found = &range;
        if (!found)
            throw Error(errc::invalid_input,
                        "sweep over " + std::string(construction_name(spec.construction)) +
                        " needs a range for parameter '" + name + "'");
        ranges.push_back(found);
    }
    if (spec.ranges.size() != names.size())
        throw Error(errc::invalid_input,
                    "sweep over " + std::string(construction_name(spec.construction)) +
                    " takes exactly parameters " + [&] {
                        std::string s;
                        for (const auto& n : names) s += s.empty() ? n : ", " + n;
                        return s;
                    }());

    SweepSummary out;
    Params assigned;
    sweep_recurse(spec, ranges, 0, assigned, out);
    return out;
}

bool verify_atoms(const GeneratorSet& gens) {
    if (gcd_all(gens) != 1)
        throw Error(errc::not_numerical,
                    "gcd of claimed atoms is not 1: " + gens.str());
    const NumericalSemigroup S{gens};
    return S.atoms() == gens.values();
}

}  // namespace addset
