#include "addset/search.hpp"

#include <algorithm>
#include <numeric>

namespace addset {

void SearchSpace::validate() const {
    if (max_multiplicity < 2)
        throw Error(errc::invalid_input, "max multiplicity must be at least 2");
    if (max_generator < max_multiplicity)
        throw Error(errc::invalid_input,
                    "max generator must be at least the max multiplicity");
    if (max_embdim < 1)
        throw Error(errc::invalid_input, "max embedding dimension must be at least 1");
    if (max_element < max_generator)
        throw Error(errc::invalid_input,
                    "max element must be at least the max generator");
}

SemigroupEnumerator::SemigroupEnumerator(const SearchSpace& space,
                                         std::optional<std::vector<int64_t>> resume_after)
    : space_(space), resume_after_(std::move(resume_after)) {
    space_.validate();
    Frame root;
    root.reach.assign(static_cast<size_t>(space_.max_generator) + 1, 0);
    root.reach[0] = 1;
    root.cand = 1;
    root.gcd = 0;
    frames_.push_back(std::move(root));
}

std::optional<NumericalSemigroup> SemigroupEnumerator::next() {
    while (!frames_.empty()) {
        const size_t depth = frames_.size() - 1;  // == prefix_.size()
        const int64_t limit = depth == 0
                                  ? std::min(space_.max_multiplicity, space_.max_generator)
                                  : space_.max_generator;

        // Advance past candidates already representable by the prefix:
        // adding one would not extend the minimal generating set.
        int64_t c = frames_.back().cand;
        const bool can_extend = static_cast<int64_t>(depth) < space_.max_embdim;
        while (can_extend && c <= limit && frames_.back().reach[static_cast<size_t>(c)])
            ++c;

        if (!can_extend || c > limit) {
            frames_.pop_back();
            if (!prefix_.empty()) prefix_.pop_back();
            continue;
        }
        frames_.back().cand = c + 1;

        Frame child;
        child.reach = frames_.back().reach;
        for (int64_t w = c; w <= space_.max_generator; ++w)
            if (child.reach[static_cast<size_t>(w - c)])
                child.reach[static_cast<size_t>(w)] = 1;
        child.cand = c + 1;
        child.gcd = std::gcd(frames_.back().gcd, c);
        const int64_t g = child.gcd;

        prefix_.push_back(c);
        frames_.push_back(std::move(child));

        if (g == 1) {
            const bool past_resume =
                !resume_after_ ||
                std::lexicographical_compare(resume_after_->begin(), resume_after_->end(),
                                             prefix_.begin(), prefix_.end());
            if (past_resume) return NumericalSemigroup(GeneratorSet(prefix_));
        }
    }
    return std::nullopt;
}

std::vector<NumericalSemigroup> enumerate_semigroups(const SearchSpace& space) {
    std::vector<NumericalSemigroup> out;
    SemigroupEnumerator en(space);
    while (auto s = en.next()) out.push_back(std::move(*s));
    return out;
}

namespace {

void require_valid_target(const LengthSet& target) {
    if (target.empty())
        throw Error(errc::invalid_param, "target length set is empty");
    if (target.min() < 2 && !(target.size() == 1 && target.min() == 1))
        throw Error(errc::invalid_param,
                    "target entries must be at least 2 (or the target must be {1})");
}

// Scans the space in the deterministic order, invoking on_hit for each
// element whose length set equals the target. Any factorization of
// length L lies between L*multiplicity and L*max_atom, which brackets
// the candidate elements per semigroup.
void scan(const LengthSet& target, const SearchSpace& space,
          const std::optional<std::vector<int64_t>>& resume_after,
          const std::function<bool(CatalogEntry)>& on_hit,
          const SemigroupDoneHook& semigroup_done) {
    require_valid_target(target);
    space.validate();
    SemigroupEnumerator en(space, resume_after);
    while (auto s = en.next()) {
        const int64_t lo = std::max<int64_t>(1, checked_mul(s->multiplicity(), target.max()));
        const int64_t hi = std::min(space.max_element,
                                    checked_mul(s->atoms().back(), target.min()));
        for (int64_t x = lo; x <= hi; ++x) {
            if (!s->contains(x)) continue;
            LengthSet as = length_set_fast(*s, x);
            if (as == target && !on_hit(CatalogEntry{*s, x, std::move(as)})) return;
        }
        if (semigroup_done) semigroup_done(*s);
    }
}

}  // namespace

std::vector<CatalogEntry> find_realizations(const LengthSet& target,
                                            const SearchSpace& space, int64_t limit) {
    return find_realizations(target, space, limit, std::nullopt, nullptr);
}

std::vector<CatalogEntry> find_realizations(
    const LengthSet& target, const SearchSpace& space, int64_t limit,
    const std::optional<std::vector<int64_t>>& resume_after,
    const SemigroupDoneHook& semigroup_done) {
    if (limit < 1)
        throw Error(errc::invalid_input, "limit must be at least 1");
    std::vector<CatalogEntry> out;
    scan(target, space, resume_after,
         [&](CatalogEntry entry) {
             out.push_back(std::move(entry));
             return static_cast<int64_t>(out.size()) < limit;
         },
         semigroup_done);
    return out;
}

std::optional<CatalogEntry> minimal_realization(const LengthSet& target,
                                                const SearchSpace& space,
                                                MinimalOrder order) {
    std::optional<CatalogEntry> best;
    const auto better = [order](const CatalogEntry& a, const CatalogEntry& b) {
        switch (order) {
            case MinimalOrder::element_genus_lex:
                if (a.element != b.element) return a.element < b.element;
                if (a.semigroup.genus() != b.semigroup.genus())
                    return a.semigroup.genus() < b.semigroup.genus();
                return a.semigroup.atoms() < b.semigroup.atoms();
            case MinimalOrder::genus_element_lex:
                if (a.semigroup.genus() != b.semigroup.genus())
                    return a.semigroup.genus() < b.semigroup.genus();
                if (a.element != b.element) return a.element < b.element;
                return a.semigroup.atoms() < b.semigroup.atoms();
            case MinimalOrder::lex_element:
            default:
                if (a.semigroup.atoms() != b.semigroup.atoms())
                    return a.semigroup.atoms() < b.semigroup.atoms();
                return a.element < b.element;
        }
    };
    scan(target, space, std::nullopt,
         [&](CatalogEntry entry) {
             if (!best || better(entry, *best)) best = std::move(entry);
             return true;
         },
         nullptr);
    return best;
}

std::vector<std::pair<int64_t, LengthSet>> catalog_length_sets(
    const NumericalSemigroup& S, int64_t x_max) {
    if (x_max < 1)
        throw Error(errc::invalid_input, "catalog bound must be at least 1");
    std::vector<std::pair<int64_t, LengthSet>> out;
    for (int64_t x = 1; x <= x_max; ++x)
        if (S.contains(x)) out.emplace_back(x, length_set_fast(S, x));
    return out;
}

}  // namespace addset
