#ifndef ADDSET_CORE_HPP
#define ADDSET_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace addset {

enum class errc {
  invalid_generator,
  not_numerical,
  not_member,
  invalid_input,
  invalid_element,
  invalid_param,
  unsupported_cardinality,
  arithmetic_overflow,
};

/// Domain error carrying one of the errc codes above. The CLI maps
/// arithmetic_overflow to exit 3 and everything else to exit 2.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Overflow-checked signed 64-bit arithmetic. All semigroup arithmetic is
// exact; overflow throws, never wraps.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

/// Strict ASCII decimal integer parse ("3", "-12"). Throws invalid_input.
int64_t parse_int64(std::string_view text);

/// Comma-separated integer list ("3,7,8"). Throws invalid_input.
std::vector<int64_t> parse_int64_list(std::string_view text);

/// A validated generating set: positive integers, stored strictly
/// increasing. Input order is irrelevant; duplicates are rejected.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<int64_t> values);
    static GeneratorSet parse(std::string_view csv);

    const std::vector<int64_t>& values() const noexcept { return values_; }
    std::string str() const;  // canonical "3,7,8"

    bool operator==(const GeneratorSet&) const = default;

private:
    std::vector<int64_t> values_;
};

/// gcd of all entries; always >= 1.
int64_t gcd_all(const GeneratorSet& gens);

/// A numerical semigroup: a submonoid of N with finite complement,
/// represented by its minimal generating set (the atoms) plus the cached
/// Apery set of the multiplicity. Immutable after construction, safe to
/// share across threads.
///
/// Memory is O(multiplicity); all queries are exact 64-bit arithmetic.
class NumericalSemigroup {
public:
    /// Builds the semigroup generated by `gens`. The input need not be
    /// minimal; it is reduced to the unique minimal generating set.
    /// Throws not_numerical when gcd(gens) != 1.
    explicit NumericalSemigroup(const GeneratorSet& gens);

    const std::vector<int64_t>& atoms() const noexcept { return atoms_; }
    int64_t multiplicity() const noexcept { return multiplicity_; }
    int64_t embedding_dimension() const noexcept {
        return static_cast<int64_t>(atoms_.size());
    }

    /// Apery set of the multiplicity: apery()[i] is the least element
    /// congruent to i mod multiplicity. apery()[0] == 0.
    const std::vector<int64_t>& apery() const noexcept { return apery_; }

    /// Largest integer not in the semigroup; -1 when the semigroup is N.
    int64_t frobenius() const noexcept { return frobenius_; }

    /// Number of gaps (nonnegative integers outside the semigroup).
    int64_t genus() const noexcept { return genus_; }

    /// Membership test, O(1) via the Apery set.
    bool contains(int64_t x) const;

    /// Apery set of an arbitrary member m >= 1, indexed by residue mod m.
    /// Throws invalid_input when m == 0, not_member when m is not in the
    /// semigroup.
    std::vector<int64_t> apery_set(int64_t m) const;

    /// Ascending list of all gaps; size equals genus().
    std::vector<int64_t> gaps() const;

    /// True iff a is one of the minimal generators.
    bool is_atom(int64_t a) const;

    std::string str() const;  // "<3,7,8>"

    bool operator==(const NumericalSemigroup& other) const {
        return atoms_ == other.atoms_;
    }

private:
    std::vector<int64_t> atoms_;
    std::vector<int64_t> apery_;
    int64_t multiplicity_ = 1;
    int64_t frobenius_ = -1;
    int64_t genus_ = 0;
};

}  // namespace addset

#endif  // ADDSET_CORE_HPP
