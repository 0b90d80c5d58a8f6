#ifndef ADDSET_VERIFY_HPP
#define ADDSET_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addset/constructions.hpp"

namespace addset {

enum class Verdict { pass, fail };

/// Outcome of re-deriving a realization's claims from scratch: the
/// addendization set by full enumeration, the factorization count, and
/// minimality of the generator list as written.
struct VerificationReport {
    Realization subject;
    LengthSet computed_as;
    LengthSet expected_as;
    bool atoms_minimal = false;
    int64_t factorization_count = 0;
    std::optional<int64_t> expected_count;
    Verdict verdict = Verdict::fail;
    std::vector<std::string> details;

    bool passed() const noexcept { return verdict == Verdict::pass; }
};

/// Recomputes AS(element) via the enumeration path (never the fast DP,
/// so the two stay independent), rebuilds the construction's generator
/// list from its parameters to confirm it is already minimal, and
/// compares against the target and the optional expected count.
/// A failed check is data, not an error; only overflow propagates.
VerificationReport check_realization(const Realization& r,
                                     std::optional<int64_t> expected_count = {});

/// One endpoint of a sweep range: offset plus, optionally, the value of
/// an earlier parameter ("n+1" has offset 1 and anchor "n").
struct SweepBound {
    int64_t offset = 0;
    std::string anchor;
};

struct SweepRange {
    SweepBound lo;
    SweepBound hi;
};

/// Parses "7", "3..10" or "n+1..n+4" (inclusive endpoints).
SweepRange parse_sweep_range(std::string_view text);

struct SweepSpec {
    Construction construction;
    std::vector<std::pair<std::string, SweepRange>> ranges;
};

struct SweepSummary {
    std::vector<VerificationReport> reports;  // valid tuples, lexicographic
    int64_t passed = 0;
    int64_t failed = 0;
    int64_t skipped = 0;  // tuples violating the construction preconditions
};

/// Runs check_realization over every parameter tuple in the ranges, in
/// lexicographic parameter order. Tuples that violate the construction's
/// preconditions (bounds, coprimality) are counted as skipped.
SweepSummary sweep_verify(const SweepSpec& spec);

/// True iff the given list is exactly the minimal generating set of the
/// semigroup it generates. Throws not_numerical when gcd != 1.
bool verify_atoms(const GeneratorSet& gens);

}  // namespace addset

#endif  // ADDSET_VERIFY_HPP
