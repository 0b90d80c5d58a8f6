#include "addset/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace addset {

int64_t Factorization::length() const {
    int64_t sum = 0;
    for (int64_t e : exponents) sum += e;
    return sum;
}

int64_t Factorization::value(std::span<const int64_t> atoms) const {
    int64_t sum = 0;
    for (size_t i = 0; i < exponents.size(); ++i)
        sum = checked_add(sum, checked_mul(exponents[i], atoms[i]));
    return sum;
}

std::vector<std::pair<int64_t, int64_t>> Factorization::atom_powers(
    std::span<const int64_t> atoms) const {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] != 0) out.emplace_back(atoms[i], exponents[i]);
    return out;
}

LengthSet::LengthSet(std::vector<int64_t> lengths) : values_(std::move(lengths)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (!values_.empty() && values_.front() < 1)
        throw Error(errc::invalid_param,
                    "length " + std::to_string(values_.front()) + " is not positive");
    if (values_.size() > 1 && values_.front() == 1)
        throw Error(errc::invalid_param,
                    "a length set containing 1 has no other element");
}

LengthSet LengthSet::parse(std::string_view csv) {
    return LengthSet(parse_int64_list(csv));
}

std::string LengthSet::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    os << '}';
    return os.str();
}

namespace {

// Recursive descent from the largest atom down. The exponent of the
// current atom counts down from remaining/atom; branches whose remainder
// falls in a gap are pruned via the O(1) membership test.
void walk(const NumericalSemigroup& S, std::vector<int64_t>& expo, size_t idx,
          int64_t remaining, const std::function<void(const Factorization&)>& visit) {
    const std::vector<int64_t>& atoms = S.atoms();
    const int64_t a = atoms[idx];
    if (idx == 0) {
        if (remaining % a == 0) {
            expo[0] = remaining / a;
            visit(Factorization{expo});
            expo[0] = 0;
        }
        return;
    }
    for (int64_t e = remaining / a; e >= 0; --e) {
        const int64_t rest = remaining - e * a;
        if (!S.contains(rest)) continue;
        expo[idx] = e;
        walk(S, expo, idx - 1, rest, visit);
    }
    expo[idx] = 0;
}

void require_positive_element(int64_t x) {
    if (x < 1)
        throw Error(errc::invalid_element,
                    "element must be a nonzero nonunit, got " + std::to_string(x));
}

}  // namespace

void for_each_factorization(const NumericalSemigroup& S, int64_t x,
                            const std::function<void(const Factorization&)>& visit) {
    require_positive_element(x);
    std::vector<int64_t> expo(S.atoms().size(), 0);
    walk(S, expo, S.atoms().size() - 1, x, visit);
}

std::vector<Factorization> factorizations(const NumericalSemigroup& S, int64_t x) {
    std::vector<Factorization> out;
    for_each_factorization(S, x, [&](const Factorization& f) { out.push_back(f); });
    return out;
}

int64_t count_factorizations(const NumericalSemigroup& S, int64_t x) {
    int64_t n = 0;
    for_each_factorization(S, x, [&](const Factorization&) { ++n; });
    return n;
}

LengthSet addendization_set(const NumericalSemigroup& S, int64_t x) {
    require_positive_element(x);
    if (!S.contains(x))
        throw Error(errc::not_member, std::to_string(x) + " not a member of " + S.str());
    std::vector<int64_t> lengths;
    for_each_factorization(S, x, [&](const Factorization& f) {
        lengths.push_back(f.length());
    });
    return LengthSet(std::move(lengths));
}

LengthSet length_set_fast(const NumericalSemigroup& S, int64_t x) {
    require_positive_element(x);
    if (!S.contains(x))
        throw Error(errc::not_member, std::to_string(x) + " not a member of " + S.str());

    // dp[v] = bitset of achievable addend counts for value v; scanning all
    // atoms per value covers every factorization without listing them.
    const std::vector<int64_t>& atoms = S.atoms();
    const size_t max_len = static_cast<size_t>(x / S.multiplicity());
    const size_t words = max_len / 64 + 1;
    std::vector<uint64_t> dp((static_cast<size_t>(x) + 1) * words, 0);
    dp[0] = 1;  // value 0: zero addends

    for (int64_t v = 1; v <= x; ++v) {
        uint64_t* dst = dp.data() + static_cast<size_t>(v) * words;
        for (int64_t a : atoms) {
            if (a > v) break;
            const uint64_t* src = dp.data() + static_cast<size_t>(v - a) * words;
            // dst |= src << 1
            for (size_t w = words; w-- > 0;)
                dst[w] |= (src[w] << 1) | (w ? src[w - 1] >> 63 : 0);
        }
    }

    std::vector<int64_t> lengths;
    const uint64_t* result = dp.data() + static_cast<size_t>(x) * words;
    for (size_t l = 1; l <= max_len; ++l)
        if (result[l / 64] >> (l % 64) & 1) lengths.push_back(static_cast<int64_t>(l));
    return LengthSet(std::move(lengths));
}

}  // namespace addset
