// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Time budgets are part of the pass condition.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "addset/cli.hpp"
#include "addset/constructions.hpp"
#include "addset/factorization.hpp"
#include "addset/search.hpp"
#include "addset/verify.hpp"
#include "oracle.hpp"

using namespace addset;

namespace {

int g_failures = 0;

struct Outcome {
    bool ok = true;
    std::ostringstream log;
};

void criterion(int id, const std::string& what, double budget_ms,
               const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.log << " unexpected exception: " << e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ms >= budget_ms) {
        o.ok = false;
        o.log << " over budget: " << ms << " ms >= " << budget_ms << " ms";
    }
    if (!o.ok) ++g_failures;
    std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " ("
              << ms << " ms) " << what;
    const std::string details = o.log.str();
    if (!details.empty()) std::cout << " --" << details;
    std::cout << std::endl;
}

void expect(Outcome& o, bool cond, const std::string& message) {
    if (!cond) {
        o.ok = false;
        o.log << ' ' << message << ';';
    }
}

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = addset::cli::run(args, out, err);
    return RunResult{status, out.str(), err.str()};
}

using AtomPowers = std::vector<std::pair<int64_t, int64_t>>;

std::set<AtomPowers> factorization_set(const Realization& r) {
    std::set<AtomPowers> out;
    for (const Factorization& f : factorizations(r.semigroup, r.element))
        out.insert(f.atom_powers(r.semigroup.atoms()));
    return out;
}

SweepSummary sweep(Construction c,
                   std::vector<std::pair<std::string, std::string>> ranges) {
    SweepSpec spec;
    spec.construction = c;
    for (auto& [name, text] : ranges)
        spec.ranges.emplace_back(name, parse_sweep_range(text));
    return sweep_verify(spec);
}

std::string failure_summary(const VerificationReport& rep) {
    std::string s;
    for (const auto& [k, v] : rep.subject.params)
        s += k + "=" + std::to_string(v) + " ";
    for (const std::string& d : rep.details) s += d + "; ";
    return s;
}

void expect_sweep_clean(Outcome& o, const SweepSummary& sum, int64_t want_pass,
                        const std::string& label) {
    expect(o, sum.failed == 0, label + ": " + std::to_string(sum.failed) + " failures");
    expect(o, sum.passed == want_pass,
           label + ": passed " + std::to_string(sum.passed) + " != " +
               std::to_string(want_pass));
    for (const VerificationReport& rep : sum.reports)
        if (!rep.passed()) {
            o.log << " [" << failure_summary(rep) << "]";
            break;
        }
}

}  // namespace

int main() {
    // outer budget covers warmup plus three timed runs; the stated
    // < 1 ms tolerance is the best-of-three expectation inside
    criterion(1, "AS table of <2,3> up to 10 via the CLI", 100.0, [](Outcome& o) {
        const std::string expected =
            "AS(2) = {1}\nAS(3) = {1}\nAS(4) = {2}\nAS(5) = {2}\nAS(6) = {2,3}\n"
            "AS(7) = {3}\nAS(8) = {3,4}\nAS(9) = {3,4}\nAS(10) = {4,5}\n";
        // warm once, then take the best of three timed runs
        RunResult r = cli_run({"catalog", "--gens", "2,3", "--to", "10"});
        expect(o, r.status == 0, "exit status " + std::to_string(r.status));
        expect(o, r.out == expected, "table mismatch:\n" + r.out);
        double best = 1e18;
        for (int i = 0; i < 3; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            r = cli_run({"catalog", "--gens", "2,3", "--to", "10"});
            best = std::min(best, std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count());
        }
        expect(o, best < 1.0, "best run " + std::to_string(best) + " ms");
        expect(o, r.out == expected, "unstable output");
    });

    criterion(2, "least x in <3,7,8> with 1, 2, 3 length values", 10.0, [](Outcome& o) {
        const NumericalSemigroup s{GeneratorSet({3, 7, 8})};
        const auto table = catalog_length_sets(s, 21);
        int64_t first[4] = {0, 0, 0, 0};
        for (const auto& [x, as] : table)
            if (as.size() <= 3 && first[as.size()] == 0) first[as.size()] = x;
        expect(o, first[1] == 3, "first singleton at " + std::to_string(first[1]));
        expect(o, first[2] == 14, "first pair at " + std::to_string(first[2]));
        expect(o, first[3] == 21, "first triple at " + std::to_string(first[3]));
        expect(o, addendization_set(s, 21).str() == "{3,4,7}",
               "AS(21) = " + addendization_set(s, 21).str());
    });

    criterion(3, "the four worked realizations, bit for bit", 100.0, [](Outcome& o) {
        struct Expected {
            std::string sigma;
            std::vector<int64_t> sigma_values;
            std::vector<int64_t> atoms;
            int64_t x;
            std::set<AtomPowers> facts;
        };
        const std::vector<Expected> cases = {
            {"2,3", {2, 3}, {7, 10, 11}, 21, {{{10, 1}, {11, 1}}, {{7, 3}}}},
            {"3,4", {3, 4}, {36, 39, 49}, 147, {{{49, 3}}, {{36, 3}, {39, 1}}}},
            {"2,3,4",
             {2, 3, 4},
             {36, 39, 49, 52, 95},
             147,
             {{{52, 1}, {95, 1}}, {{49, 3}}, {{36, 3}, {39, 1}}}},
            {"3,5,7",
             {3, 5, 7},
             {350, 360, 492, 502, 979},
             2460,
             {{{492, 5}}, {{350, 6}, {360, 1}}, {{502, 1}, {979, 2}}}},
        };
        for (const Expected& e : cases) {
            // through the CLI, exactly as a user would run it
            const RunResult run =
                cli_run({"realize", "--sigma", e.sigma, "--verify", "--json"});
            const std::string tag = "{" + e.sigma + "}";
            expect(o, run.status == 0, tag + ": exit " + std::to_string(run.status));
            const auto out = nlohmann::json::parse(run.out);
            expect(o, out["atoms"].get<std::vector<int64_t>>() == e.atoms,
                   tag + ": atoms mismatch");
            expect(o, out["x"].get<int64_t>() == e.x, tag + ": x mismatch");
            expect(o, out["sigma"].get<std::vector<int64_t>>() == e.sigma_values,
                   tag + ": sigma mismatch");
            expect(o, out["verdict"] == "pass", tag + ": verdict not pass");
            std::set<AtomPowers> got;
            for (const auto& f : out["factorizations"]) {
                AtomPowers powers;
                for (const auto& pair : f)
                    powers.emplace_back(pair[0].get<int64_t>(), pair[1].get<int64_t>());
                got.insert(powers);
            }
            expect(o, got == e.facts, tag + ": factorization lists mismatch");

            // and again through the library, which must agree
            const Realization r = realize(LengthSet(e.sigma_values));
            expect(o, r.semigroup.atoms() == e.atoms, tag + ": library atoms mismatch");
            expect(o, addendization_set(r.semigroup, r.element).values() ==
                          e.sigma_values,
                   tag + ": library AS mismatch");
            expect(o, factorization_set(r) == e.facts,
                   tag + ": library factorizations mismatch");
        }
    });

    criterion(4, "pair-with-two sweep, n in [3,10], k in [7,25]", 5000.0,
              [](Outcome& o) {
                  const SweepSummary sum =
                      sweep(Construction::pair_with_two, {{"n", "3..10"}, {"k", "7..25"}});
                  int64_t coprime = 0, skips = 0;
                  for (int64_t n = 3; n <= 10; ++n)
                      for (int64_t k = 7; k <= 25; ++k)
                          (std::gcd(n, k) == 1 ? coprime : skips) += 1;
                  expect_sweep_clean(o, sum, coprime, "pair-with-two");
                  expect(o, sum.skipped == skips,
                         "skipped " + std::to_string(sum.skipped) + " != " +
                             std::to_string(skips));
                  for (const VerificationReport& rep : sum.reports) {
                      const int64_t n = rep.subject.params[0].second;
                      expect(o, rep.computed_as.values() == std::vector<int64_t>{2, n},
                             "AS != {2,n} at n=" + std::to_string(n));
                      expect(o, rep.factorization_count == 2, "count != 2");
                  }
              });

    criterion(5, "triple-with-two sweep, n in [3,6], t in [n+1,n+4]", 60000.0,
              [](Outcome& o) {
                  const SweepSummary sum = sweep(Construction::triple_with_two,
                                                 {{"n", "3..6"}, {"t", "n+1..n+4"}});
                  expect_sweep_clean(o, sum, 16, "triple-with-two");
                  for (const VerificationReport& rep : sum.reports) {
                      const int64_t n = rep.subject.params[0].second;
                      const int64_t t = rep.subject.params[1].second;
                      expect(o,
                             rep.computed_as.values() == std::vector<int64_t>{2, n, t},
                             "AS != {2,n,t}");
                      expect(o, rep.factorization_count == 3, "count != 3");
                      expect(o, rep.atoms_minimal, "five-generator list not minimal");
                      expect(o,
                             verify_atoms(GeneratorSet(construction_generators(
                                 rep.subject.construction, rep.subject.params))),
                             "verify_atoms failed");
                  }
              });

    criterion(6, "pair-general sweep, n in [3,6], t in [n+1,n+4]", 30000.0,
              [](Outcome& o) {
                  const SweepSummary sum = sweep(Construction::pair_general,
                                                 {{"n", "3..6"}, {"t", "n+1..n+4"}});
                  expect_sweep_clean(o, sum, 16, "pair-general");
                  for (const VerificationReport& rep : sum.reports) {
                      const int64_t n = rep.subject.params[0].second;
                      const int64_t t = rep.subject.params[1].second;
                      expect(o, rep.computed_as.values() == std::vector<int64_t>{n, t},
                             "AS != {n,t}");
                      expect(o, rep.factorization_count == 2, "count != 2");
                  }
              });

    criterion(7, "triple-general sweep, r in [1,3], n in [r+2,r+4], t in [n+1,n+3]",
              120000.0, [](Outcome& o) {
                  const SweepSummary sum =
                      sweep(Construction::triple_general,
                            {{"r", "1..3"}, {"n", "r+2..r+4"}, {"t", "n+1..n+3"}});
                  expect_sweep_clean(o, sum, 27, "triple-general");
                  for (const VerificationReport& rep : sum.reports) {
                      const int64_t r = rep.subject.params[0].second;
                      const int64_t n = rep.subject.params[1].second;
                      const int64_t t = rep.subject.params[2].second;
                      expect(o,
                             rep.computed_as.values() ==
                                 std::vector<int64_t>{r + 1, n, t},
                             "AS != {r+1,n,t}");
                      expect(o, rep.factorization_count == 3, "count != 3");
                  }
              });

    criterion(8, "x-minimal realizations of {2,3} and {2,3,4}", 600000.0,
              [](Outcome& o) {
                  const auto m23 =
                      minimal_realization(LengthSet({2, 3}), SearchSpace{10, 10, 10, 10});
                  expect(o, m23.has_value(), "{2,3}: nothing found");
                  if (m23) {
                      expect(o, m23->semigroup.atoms() == std::vector<int64_t>{2, 3},
                             "{2,3}: atoms " + m23->semigroup.str());
                      expect(o, m23->element == 6,
                             "{2,3}: x = " + std::to_string(m23->element));
                  }

                  // The hedged hypothesis names <9,12,13,23> with x = 36; the
                  // exhaustive verdict is binding either way.
                  const auto m234 = minimal_realization(LengthSet({2, 3, 4}),
                                                        SearchSpace{23, 23, 23, 36});
                  expect(o, m234.has_value(), "{2,3,4}: nothing found");
                  if (m234) {
                      const bool hypothesis =
                          m234->semigroup.atoms() == std::vector<int64_t>{9, 12, 13, 23} &&
                          m234->element == 36;
                      const std::set<int64_t> brute =
                          oracle::length_set(m234->semigroup.atoms(), m234->element);
                      const bool smaller =
                          m234->element < 36 && brute == std::set<int64_t>{2, 3, 4};
                      expect(o, hypothesis || smaller,
                             "{2,3,4}: verdict " + m234->semigroup.str() + " x=" +
                                 std::to_string(m234->element) + " unconfirmed");
                      o.log << " [{2,3,4} verdict: " << m234->semigroup.str()
                            << " x=" << m234->element
                            << (hypothesis ? ", hypothesis confirmed"
                                           : ", smaller than the hypothesized x=36")
                            << "]";
                  }
              });

    criterion(9, "oracle equivalence and invariants over the bounded corpus", 300000.0,
              [](Outcome& o) {
                  const std::vector<NumericalSemigroup> corpus =
                      enumerate_semigroups(SearchSpace{6, 20, 4, 60});
                  expect(o, !corpus.empty(), "empty corpus");
                  int64_t violations = 0;
                  for (const NumericalSemigroup& s : corpus) {
                      for (int64_t x = 1; x <= 60; ++x) {
                          const auto facts = factorizations(s, x);
                          if (facts.empty() != !s.contains(x)) ++violations;
                          for (const Factorization& f : facts)
                              if (f.value(s.atoms()) != x) ++violations;
                          if (!s.contains(x)) continue;
                          const LengthSet slow = addendization_set(s, x);
                          if (length_set_fast(s, x) != slow) ++violations;
                          const bool singleton_one =
                              slow.values() == std::vector<int64_t>{1};
                          if (singleton_one != s.is_atom(x)) ++violations;
                      }
                  }
                  // superadditivity on 1000 sampled pairs, fixed seed
                  std::mt19937_64 rng(0xADD5E7);
                  std::uniform_int_distribution<size_t> pick_s(0, corpus.size() - 1);
                  std::uniform_int_distribution<int64_t> pick_x(1, 60);
                  int64_t sampled = 0;
                  while (sampled < 1000) {
                      const NumericalSemigroup& s = corpus[pick_s(rng)];
                      const int64_t x = pick_x(rng), y = pick_x(rng);
                      if (!s.contains(x) || !s.contains(y)) continue;
                      ++sampled;
                      const auto ax = addendization_set(s, x).values();
                      const auto ay = addendization_set(s, y).values();
                      const auto axy = addendization_set(s, x + y).values();
                      for (int64_t p : ax)
                          for (int64_t q : ay)
                              if (!std::binary_search(axy.begin(), axy.end(), p + q))
                                  ++violations;
                  }
                  expect(o, violations == 0,
                         std::to_string(violations) + " violations over " +
                             std::to_string(corpus.size()) + " semigroups");
              });

    criterion(10, "negative controls through the CLI", 5000.0, [](Outcome& o) {
        const RunResult one = cli_run({"realize", "--sigma", "1,2"});
        expect(o, one.status == 2, "{1,2} exit " + std::to_string(one.status));

        const RunResult big = cli_run({"realize", "--sigma", "2,3,4,5"});
        expect(o, big.status == 2, "{2,3,4,5} exit " + std::to_string(big.status));
        expect(o, big.err.find("search") != std::string::npos,
               "{2,3,4,5} lacks search guidance");

        // corrupted realization: x off by one
        const RunResult bad = cli_run(
            {"verify", "--gens", "7,10,11", "--x", "22", "--sigma", "2,3"});
        expect(o, bad.status == 1, "corrupted verify exit " + std::to_string(bad.status));
        expect(o, bad.out.find("verdict: FAIL") != std::string::npos,
               "corrupted verify did not report FAIL");
    });

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criterion(s) failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
