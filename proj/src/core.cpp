#include "addset/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace addset {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(errc::arithmetic_overflow, "integer overflow computing " +
                    std::to_string(a) + " + " + std::to_string(b));
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(errc::arithmetic_overflow, "integer overflow computing " +
                    std::to_string(a) + " - " + std::to_string(b));
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(errc::arithmetic_overflow, "integer overflow computing " +
                    std::to_string(a) + " * " + std::to_string(b));
    return r;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

int64_t parse_int64(std::string_view text) {
    text = trim(text);
    int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw Error(errc::invalid_input,
                    "not a valid integer: '" + std::string(text) + "'");
    return value;
}

std::vector<int64_t> parse_int64_list(std::string_view text) {
    std::vector<int64_t> out;
    size_t start = 0;
    if (trim(text).empty())
        throw Error(errc::invalid_input, "empty integer list");
    while (true) {
        size_t comma = text.find(',', start);
        std::string_view token = (comma == std::string_view::npos)
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        out.push_back(parse_int64(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

GeneratorSet::GeneratorSet(std::vector<int64_t> values) : values_(std::move(values)) {
    if (values_.empty())
        throw Error(errc::invalid_generator, "generator set is empty");
    std::sort(values_.begin(), values_.end());
    if (values_.front() < 1)
        throw Error(errc::invalid_generator,
                    "generator " + std::to_string(values_.front()) + " is not positive");
    auto dup = std::adjacent_find(values_.begin(), values_.end());
    if (dup != values_.end())
        throw Error(errc::invalid_generator,
                    "duplicate generator " + std::to_string(*dup));
}

GeneratorSet GeneratorSet::parse(std::string_view csv) {
    return GeneratorSet(parse_int64_list(csv));
}

std::string GeneratorSet::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    return os.str();
}

int64_t gcd_all(const GeneratorSet& gens) {
    int64_t g = 0;
    for (int64_t v : gens.values()) g = std::gcd(g, v);
    return g;
}

NumericalSemigroup::NumericalSemigroup(const GeneratorSet& gens) {
    const std::vector<int64_t>& vals = gens.values();
    const int64_t g = gcd_all(gens);
    if (g != 1)
        throw Error(errc::not_numerical,
                    "gcd of generators is " + std::to_string(g) +
                    "; <" + gens.str() + "> has infinite complement in N");

    multiplicity_ = vals.front();

    // Apery set of the multiplicity by shortest-path relaxation over the
    // residue classes: start from 0 and relax by every generator until no
    // class improves. Works with non-minimal input as well.
    const int64_t m = multiplicity_;
    constexpr int64_t kUnreached = std::numeric_limits<int64_t>::max();
    apery_.assign(static_cast<size_t>(m), kUnreached);
    apery_[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int64_t r = 0; r < m; ++r) {
            if (apery_[static_cast<size_t>(r)] == kUnreached) continue;
            for (int64_t a : vals) {
                const int64_t v = checked_add(apery_[static_cast<size_t>(r)], a);
                const size_t r2 = static_cast<size_t>(v % m);
                if (v < apery_[r2]) {
                    apery_[r2] = v;
                    changed = true;
                }
            }
        }
    }

    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m;
    genus_ = 0;
    for (int64_t w : apery_) genus_ += w / m;

    // Minimal generating set: a generator is dropped iff it splits as
    // (smaller generator) + (nonzero member). Membership is O(1) now.
    for (int64_t v : vals) {
        bool reducible = false;
        for (int64_t a : vals) {
            if (a >= v) break;
            if (contains(v - a)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) atoms_.push_back(v);
    }
}

bool NumericalSemigroup::contains(int64_t x) const {
    if (x < 0) return false;
    return x >= apery_[static_cast<size_t>(x % multiplicity_)];
}

std::vector<int64_t> NumericalSemigroup::apery_set(int64_t m) const {
    if (m == 0)
        throw Error(errc::invalid_input, "Apery set of 0 is undefined");
    if (m < 0 || !contains(m))
        throw Error(errc::not_member,
                    std::to_string(m) + " not a member of " + str());
    std::vector<int64_t> out(static_cast<size_t>(m));
    for (int64_t r = 0; r < m; ++r) {
        int64_t v = r;
        while (!contains(v)) v = checked_add(v, m);
        out[static_cast<size_t>(r)] = v;
    }
    return out;
}

std::vector<int64_t> NumericalSemigroup::gaps() const {
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(genus_));
    for (int64_t x = 0; x <= frobenius_; ++x)
        if (!contains(x)) out.push_back(x);
    return out;
}

bool NumericalSemigroup::is_atom(int64_t a) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

std::string NumericalSemigroup::str() const {
    std::ostringstream os;
    os << '<';
    for (size_t i = 0; i < atoms_.size(); ++i) {
        if (i) os << ',';
        os << atoms_[i];
    }
    os << '>';
    return os.str();
}

}  // namespace addset
