#include "addset/constructions.hpp"

#include <numeric>

namespace addset {

namespace {

constexpr std::string_view kNames[] = {
    "singleton", "pair-with-two", "pair-general", "triple-with-two", "triple-general",
};

int64_t get_param(const Params& params, std::string_view name) {
    for (const auto& [key, value] : params)
        if (key == name) return value;
    throw Error(errc::invalid_input,
                "missing construction parameter '" + std::string(name) + "'");
}

void require(bool ok, const std::string& message) {
    if (!ok) throw Error(errc::invalid_param, message);
}

Realization make(Construction c, Params params, int64_t element,
                 std::vector<int64_t> target) {
    NumericalSemigroup S{GeneratorSet(construction_generators(c, params))};
    return Realization{c, std::move(params), std::move(S), element,
                       LengthSet(std::move(target))};
}

}  // namespace

std::string_view construction_name(Construction c) {
    return kNames[static_cast<size_t>(c)];
}

std::optional<Construction> construction_from_name(std::string_view name) {
    for (size_t i = 0; i < std::size(kNames); ++i)
        if (kNames[i] == name) return static_cast<Construction>(i);
    return std::nullopt;
}

const std::vector<std::string>& construction_params(Construction c) {
    static const std::vector<std::string> n{"n"};
    static const std::vector<std::string> nk{"n", "k"};
    static const std::vector<std::string> nt{"n", "t"};
    static const std::vector<std::string> rnt{"r", "n", "t"};
    switch (c) {
        case Construction::singleton: return n;
        case Construction::pair_with_two: return nk;
        case Construction::pair_general:
        case Construction::triple_with_two: return nt;
        case Construction::triple_general: return rnt;
    }
    throw Error(errc::invalid_input, "unknown construction");
}

std::vector<int64_t> construction_generators(Construction c, const Params& params) {
    switch (c) {
        case Construction::singleton: {
            const int64_t n = get_param(params, "n");
            return {2, checked_sub(checked_mul(2, n), 1)};
        }
        case Construction::pair_with_two: {
            const int64_t n = get_param(params, "n");
            const int64_t k = get_param(params, "k");
            return {k, checked_add(k, n),
                    checked_sub(checked_mul(k, n), checked_add(k, n))};
        }
        case Construction::pair_general: {
            const int64_t n = get_param(params, "n");
            const int64_t t = get_param(params, "t");
            const int64_t tn2 = checked_mul(t, checked_mul(n, n));
            const int64_t t2n = checked_mul(t, checked_mul(t, n));
            return {tn2, checked_add(tn2, n), checked_add(t2n, 1)};
        }
        case Construction::triple_with_two: {
            const int64_t n = get_param(params, "n");
            const int64_t t = get_param(params, "t");
            const int64_t tn2 = checked_mul(t, checked_mul(n, n));
            const int64_t t2n = checked_mul(t, checked_mul(t, n));
            const int64_t t2n2 = checked_mul(t2n, n);
            return {tn2, checked_add(tn2, n), checked_add(t2n, 1),
                    checked_add(t2n, checked_add(n, 1)),
                    checked_sub(checked_sub(t2n2, t2n), 1)};
        }
        case Construction::triple_general: {
            const int64_t r = get_param(params, "r");
            const int64_t n = get_param(params, "n");
            const int64_t t = get_param(params, "t");
            const int64_t tn2 = checked_mul(t, checked_mul(n, n));
            const int64_t t2n = checked_mul(t, checked_mul(t, n));
            const int64_t t2n2 = checked_mul(t2n, n);
            return {checked_mul(r, tn2), checked_mul(r, checked_add(tn2, n)),
                    checked_mul(r, checked_add(t2n, 1)),
                    checked_mul(r, checked_add(t2n, checked_add(n, 1))),
                    checked_sub(checked_sub(t2n2, t2n), 1)};
        }
    }
    throw Error(errc::invalid_input, "unknown construction");
}

int64_t expected_factorization_count(Construction c) {
    switch (c) {
        case Construction::singleton: return 1;
        case Construction::pair_with_two:
        case Construction::pair_general: return 2;
        case Construction::triple_with_two:
        case Construction::triple_general: return 3;
    }
    throw Error(errc::invalid_input, "unknown construction");
}

Realization realize_singleton(int64_t n) {
    require(n >= 2, "singleton requires n >= 2, got n = " + std::to_string(n));
    return make(Construction::singleton, {{"n", n}}, checked_mul(2, n), {n});
}

Realization realize_pair_with_two(int64_t n, std::optional<int64_t> k_opt) {
    require(n >= 3, "pair-with-two requires n >= 3, got n = " + std::to_string(n));
    int64_t k;
    if (k_opt) {
        k = *k_opt;
        require(k >= 7, "pair-with-two requires k >= 7, got k = " + std::to_string(k));
        require(std::gcd(n, k) == 1,
                "pair-with-two requires gcd(n, k) = 1, got gcd(" +
                std::to_string(n) + ", " + std::to_string(k) + ") = " +
                std::to_string(std::gcd(n, k)));
    } else {
        k = 7;
        while (std::gcd(n, k) != 1) ++k;
    }
    return make(Construction::pair_with_two, {{"n", n}, {"k", k}},
                checked_mul(k, n), {2, n});
}

Realization realize_pair_general(int64_t n, int64_t t) {
    require(n >= 3, "pair-general requires n >= 3, got n = " + std::to_string(n));
    require(t >= n + 1, "pair-general requires t >= n+1, got n = " +
            std::to_string(n) + ", t = " + std::to_string(t));
    const int64_t x = checked_add(checked_mul(checked_mul(t, t), checked_mul(n, n)), n);
    return make(Construction::pair_general, {{"n", n}, {"t", t}}, x, {n, t});
}

Realization realize_triple_with_two(int64_t n, int64_t t) {
    require(n >= 3, "triple-with-two requires n >= 3, got n = " + std::to_string(n));
    require(t >= n + 1, "triple-with-two requires t >= n+1, got n = " +
            std::to_string(n) + ", t = " + std::to_string(t));
    const int64_t x = checked_add(checked_mul(checked_mul(t, t), checked_mul(n, n)), n);
    return make(Construction::triple_with_two, {{"n", n}, {"t", t}}, x, {2, n, t});
}

Realization realize_triple_general(int64_t r, int64_t n, int64_t t) {
    require(r >= 1, "triple-general requires r >= 1, got r = " + std::to_string(r));
    require(n >= r + 2, "triple-general requires n >= r+2, got r = " +
            std::to_string(r) + ", n = " + std::to_string(n));
    require(t >= n + 1, "triple-general requires t >= n+1, got n = " +
            std::to_string(n) + ", t = " + std::to_string(t));
    // The unscaled fifth generator must be coprime to r, or the five
    // generators share a factor and generate no numerical semigroup
    // (first possible at r = 5, e.g. r=5, n=8, t=9). Always fine for
    // r <= 4: e is odd, and e = t^2 n(n-1) - 1 is never 0 mod 3.
    const int64_t t2n = checked_mul(t, checked_mul(t, n));
    const int64_t e = checked_sub(checked_sub(checked_mul(t2n, n), t2n), 1);
    require(std::gcd(r, e) == 1,
            "triple-general is undefined at r = " + std::to_string(r) + ", n = " +
            std::to_string(n) + ", t = " + std::to_string(t) + ": gcd(r, t^2n^2-t^2n-1) = " +
            std::to_string(std::gcd(r, e)) + "; no construction covers this target, "
            "use the search command");
    const int64_t x = checked_mul(
        r, checked_add(checked_mul(checked_mul(t, t), checked_mul(n, n)), n));
    return make(Construction::triple_general, {{"r", r}, {"n", n}, {"t", t}}, x,
                {checked_add(r, 1), n, t});
}

Realization realize(const LengthSet& target) {
    if (target.empty())
        throw Error(errc::invalid_param, "sigma is empty");
    if (target.min() < 2)
        throw Error(errc::invalid_param,
                    "sigma entries must be at least 2; no element has an "
                    "addendization set " + target.str());
    const std::vector<int64_t>& v = target.values();
    switch (v.size()) {
        case 1:
            return realize_singleton(v[0]);
        case 2:
            if (v[0] == 2) return realize_pair_with_two(v[1]);
            return realize_pair_general(v[0], v[1]);
        case 3:
            if (v[0] == 2) return realize_triple_with_two(v[1], v[2]);
            return realize_triple_general(v[0] - 1, v[1], v[2]);
        default:
            throw Error(errc::unsupported_cardinality,
                        "no construction covers " + std::to_string(v.size()) +
                        " lengths; use the search command to look for a "
                        "realization within bounds");
    }
}

}  // namespace addset
