#ifndef ADDSET_SEARCH_HPP
#define ADDSET_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "addset/core.hpp"
#include "addset/factorization.hpp"

namespace addset {

/// Bounds delimiting a finite family of numerical semigroups and
/// candidate elements.
struct SearchSpace {
    int64_t max_multiplicity = 2;
    int64_t max_generator = 2;
    int64_t max_embdim = 1;
    int64_t max_element = 2;

    /// Throws invalid_input when the bounds are inconsistent.
    void validate() const;
};

struct CatalogEntry {
    NumericalSemigroup semigroup;
    int64_t element;
    LengthSet as_set;
};

/// Streams every numerical semigroup whose minimal generating set fits
/// the bounds, each exactly once, ascending by (multiplicity, atom list
/// lexicographic). N = <1> is part of every space. Generated by
/// depth-first extension of gcd-free minimal tuples; `resume_after`
/// skips everything up to and including that atom tuple.
class SemigroupEnumerator {
public:
    explicit SemigroupEnumerator(const SearchSpace& space,
                                 std::optional<std::vector<int64_t>> resume_after = {});
    std::optional<NumericalSemigroup> next();

private:
    struct Frame {
        std::vector<char> reach;  // membership of <prefix> up to max_generator
        int64_t cand;             // next candidate atom to try
        int64_t gcd;              // gcd of the prefix, 0 when empty
    };
    SearchSpace space_;
    std::optional<std::vector<int64_t>> resume_after_;
    std::vector<Frame> frames_;
    std::vector<int64_t> prefix_;
};

/// The whole stream, materialized.
std::vector<NumericalSemigroup> enumerate_semigroups(const SearchSpace& space);

/// Invoked after a semigroup has been fully scanned; used for
/// checkpointing resumable searches.
using SemigroupDoneHook = std::function<void(const NumericalSemigroup&)>;

/// Up to `limit` elements whose addendization set equals `target`, in
/// deterministic order: semigroup stream order, then ascending element.
/// An empty result means no realization within the bounds, which is
/// data, not an error. Targets must have entries >= 2, or be {1}.
std::vector<CatalogEntry> find_realizations(const LengthSet& target,
                                            const SearchSpace& space, int64_t limit);
std::vector<CatalogEntry> find_realizations(
    const LengthSet& target, const SearchSpace& space, int64_t limit,
    const std::optional<std::vector<int64_t>>& resume_after,
    const SemigroupDoneHook& semigroup_done);

/// Tie-breaking orders for the minimal realization. The default compares
/// the element first, then the genus, then the atom list.
enum class MinimalOrder { element_genus_lex, genus_element_lex, lex_element };

/// The least in-space realization of `target` under the given order, or
/// nullopt when the space contains none.
std::optional<CatalogEntry> minimal_realization(
    const LengthSet& target, const SearchSpace& space,
    MinimalOrder order = MinimalOrder::element_genus_lex);

/// (x, AS(x)) for every member x with 1 <= x <= x_max, ascending.
std::vector<std::pair<int64_t, LengthSet>> catalog_length_sets(
    const NumericalSemigroup& S, int64_t x_max);

}  // namespace addset

#endif  // ADDSET_SEARCH_HPP
