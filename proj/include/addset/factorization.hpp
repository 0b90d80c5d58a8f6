#ifndef ADDSET_FACTORIZATION_HPP
#define ADDSET_FACTORIZATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "addset/core.hpp"

namespace addset {

/// One decomposition of an element into atoms, as an exponent vector
/// parallel to atoms(S) in ascending order.
struct Factorization {
    std::vector<int64_t> exponents;

    /// Number of addends.
    int64_t length() const;

    /// Reconstructs the element: sum of exponent * atom.
    int64_t value(std::span<const int64_t> atoms) const;

    /// (atom, exponent) pairs with zero exponents omitted, atoms ascending.
    std::vector<std::pair<int64_t, int64_t>> atom_powers(
        std::span<const int64_t> atoms) const;

    bool operator==(const Factorization&) const = default;
};

/// A finite set of factorization lengths, stored strictly increasing.
/// Construction normalizes order and drops duplicates; entries must be
/// positive, and a set containing 1 cannot contain anything else (an atom
/// has no other decomposition).
class LengthSet {
public:
    LengthSet() = default;
    explicit LengthSet(std::vector<int64_t> lengths);
    static LengthSet parse(std::string_view csv);

    const std::vector<int64_t>& values() const noexcept { return values_; }
    bool empty() const noexcept { return values_.empty(); }
    size_t size() const noexcept { return values_.size(); }
    int64_t min() const { return values_.front(); }
    int64_t max() const { return values_.back(); }

    std::string str() const;  // "{3,4,7}"

    bool operator==(const LengthSet&) const = default;

private:
    std::vector<int64_t> values_;
};

/// Visits every factorization of x into the atoms of S, exactly once, in
/// the canonical order: the exponent of the largest atom varies slowest
/// and counts down. x >= 1 required; a non-member yields no visits.
void for_each_factorization(const NumericalSemigroup& S, int64_t x,
                            const std::function<void(const Factorization&)>& visit);

/// All factorizations of x, in the canonical order. Empty iff x is not a
/// member.
std::vector<Factorization> factorizations(const NumericalSemigroup& S, int64_t x);

/// |factorizations(S, x)| without materializing the list.
int64_t count_factorizations(const NumericalSemigroup& S, int64_t x);

/// The addendization set AS(x): every possible number of addends in a
/// decomposition of x into atoms. Computed by full enumeration.
/// Throws invalid_element when x < 1, not_member when x is not in S.
LengthSet addendization_set(const NumericalSemigroup& S, int64_t x);

/// Same contract as addendization_set, computed by a dynamic program over
/// achievable addend counts per value instead of enumerating
/// factorizations. The two routes are independent by construction.
LengthSet length_set_fast(const NumericalSemigroup& S, int64_t x);

}  // namespace addset

#endif  // ADDSET_FACTORIZATION_HPP
