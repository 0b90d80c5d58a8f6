#include "addset/cli.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "addset/constructions.hpp"
#include "addset/core.hpp"
#include "addset/factorization.hpp"
#include "addset/search.hpp"
#include "addset/serialization.hpp"
#include "addset/verify.hpp"

namespace addset::cli {

namespace {

struct Options {
    std::string gens;
    int64_t x = 0;
    int64_t to = 0;
    std::string sigma;
    std::string construction;
    std::optional<int64_t> n, k, t, r;
    std::string range_n, range_k, range_t, range_r;
    std::optional<int64_t> expected_count;
    bool verify_flag = false;
    int64_t max_mult = 0, max_gen = 0, max_embdim = 0, max_x = 0;
    int64_t limit = 0;
    std::string order = "x";
    bool json = false;
    bool require_hit = false;
    std::string checkpoint;
};

std::string csv(const std::vector<int64_t>& values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    return os.str();
}

SearchSpace make_space(const Options& opt) {
    SearchSpace space;
    space.max_generator = opt.max_gen;
    space.max_multiplicity = opt.max_mult > 0 ? opt.max_mult : opt.max_gen;
    space.max_embdim = opt.max_embdim > 0 ? opt.max_embdim : opt.max_gen;
    space.max_element = opt.max_x;
    space.validate();
    return space;
}

Construction parse_construction(const std::string& name) {
    auto c = construction_from_name(name);
    if (!c)
        throw Error(errc::invalid_input,
                    "unknown construction '" + name +
                    "' (expected singleton, pair-with-two, pair-general, "
                    "triple-with-two or triple-general)");
    return *c;
}

Realization realize_from_options(const Options& opt) {
    if (!opt.sigma.empty()) return realize(LengthSet::parse(opt.sigma));
    if (opt.construction.empty())
        throw Error(errc::invalid_input, "realize needs --sigma or --construction");
    switch (parse_construction(opt.construction)) {
        case Construction::singleton:
            if (!opt.n) throw Error(errc::invalid_input, "singleton needs --n");
            return realize_singleton(*opt.n);
        case Construction::pair_with_two:
            if (!opt.n) throw Error(errc::invalid_input, "pair-with-two needs --n");
            return realize_pair_with_two(*opt.n, opt.k);
        case Construction::pair_general:
            if (!opt.n || !opt.t)
                throw Error(errc::invalid_input, "pair-general needs --n and --t");
            return realize_pair_general(*opt.n, *opt.t);
        case Construction::triple_with_two:
            if (!opt.n || !opt.t)
                throw Error(errc::invalid_input, "triple-with-two needs --n and --t");
            return realize_triple_with_two(*opt.n, *opt.t);
        case Construction::triple_general:
            if (!opt.r || !opt.n || !opt.t)
                throw Error(errc::invalid_input,
                            "triple-general needs --r, --n and --t");
            return realize_triple_general(*opt.r, *opt.n, *opt.t);
    }
    throw Error(errc::invalid_input, "unknown construction");
}

int cmd_atoms(const Options& opt, std::ostream& out) {
    NumericalSemigroup S{GeneratorSet::parse(opt.gens)};
    if (opt.json)
        out << json(S.atoms()).dump() << '\n';
    else
        out << csv(S.atoms()) << '\n';
    return 0;
}

int cmd_frobenius(const Options& opt, std::ostream& out) {
    NumericalSemigroup S{GeneratorSet::parse(opt.gens)};
    out << (opt.json ? json(S.frobenius()).dump() : std::to_string(S.frobenius()))
        << '\n';
    return 0;
}

int cmd_gaps(const Options& opt, std::ostream& out) {
    NumericalSemigroup S{GeneratorSet::parse(opt.gens)};
    if (opt.json)
        out << json(S.gaps()).dump() << '\n';
    else
        out << csv(S.gaps()) << '\n';
    return 0;
}

int cmd_contains(const Options& opt, std::ostream& out) {
    if (opt.x < 0) throw Error(errc::invalid_input, "--x must be nonnegative");
    NumericalSemigroup S{GeneratorSet::parse(opt.gens)};
    const bool member = S.contains(opt.x);
    out << (opt.json ? json(member).dump() : member ? "true" : "false") << '\n';
    return 0;
}

int cmd_factorize(const Options& opt, std::ostream& out) {
    NumericalSemigroup S{GeneratorSet::parse(opt.gens)};
    const std::vector<Factorization> facts = factorizations(S, opt.x);
    if (opt.json) {
        json arr = json::array();
        for (const Factorization& f : facts) arr.push_back(to_json(f, S.atoms()));
        out << arr.dump() << '\n';
    } else {
        for (const Factorization& f : facts)
            out << factorization_line(opt.x, f, S.atoms()) << '\n';
    }
    return 0;
}

int cmd_as(const Options& opt, std::ostream& out) {
    NumericalSemigroup S{GeneratorSet::parse(opt.gens)};
    const LengthSet as = addendization_set(S, opt.x);
    out << (opt.json ? to_json(as).dump() : as.str()) << '\n';
    return 0;
}

int cmd_realize(const Options& opt, std::ostream& out) {
    const Realization r = realize_from_options(opt);
    std::optional<VerificationReport> report;
    if (opt.verify_flag)
        report = check_realization(r, expected_factorization_count(r.construction));

    if (opt.json) {
        json o = to_json(r);
        if (report) {
            json facts = json::array();
            for (const Factorization& f : factorizations(r.semigroup, r.element))
                facts.push_back(to_json(f, r.semigroup.atoms()));
            o["factorizations"] = facts;
            o["count"] = report->factorization_count;
            o["verdict"] = report->passed() ? "pass" : "fail";
            if (!report->details.empty()) o["details"] = report->details;
        }
        out << o.dump() << '\n';
    } else {
        out << "construction: " << construction_name(r.construction) << '\n'
            << "params: " << params_line(r.params) << '\n'
            << "atoms: " << csv(r.semigroup.atoms()) << '\n'
            << "x: " << r.element << '\n'
            << "sigma: " << r.target.str() << '\n';
        if (report) {
            out << "factorizations:" << '\n';
            for (const Factorization& f : factorizations(r.semigroup, r.element))
                out << "  " << factorization_line(r.element, f, r.semigroup.atoms())
                    << '\n';
            out << "count: " << report->factorization_count << '\n';
            for (const std::string& d : report->details) out << "detail: " << d << '\n';
            out << "verdict: " << (report->passed() ? "PASS" : "FAIL") << '\n';
        }
    }
    return report && !report->passed() ? 1 : 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const GeneratorSet gens = GeneratorSet::parse(opt.gens);
    const LengthSet expected = LengthSet::parse(opt.sigma);
    const NumericalSemigroup S{gens};
    const bool minimal = verify_atoms(gens);

    std::vector<int64_t> lengths;
    int64_t count = 0;
    if (opt.x >= 1)
        for_each_factorization(S, opt.x, [&](const Factorization& f) {
            ++count;
            lengths.push_back(f.length());
        });
    const LengthSet computed{std::move(lengths)};

    std::vector<std::string> details;
    if (!minimal)
        details.push_back("claimed atoms are not minimal: reduced to " + S.str());
    if (computed != expected)
        details.push_back("AS mismatch: computed " + computed.str() + ", expected " +
                          expected.str());
    if (opt.expected_count && count != *opt.expected_count)
        details.push_back("factorization count " + std::to_string(count) +
                          " != expected " + std::to_string(*opt.expected_count));
    const bool pass = details.empty();

    if (opt.json) {
        json o{{"atoms", gens.values()},
               {"x", opt.x},
               {"computed_as", computed.values()},
               {"expected_as", expected.values()},
               {"atoms_minimal", minimal},
               {"count", count}};
        if (opt.expected_count) o["expected_count"] = *opt.expected_count;
        o["verdict"] = pass ? "pass" : "fail";
        o["details"] = details;
        out << o.dump() << '\n';
    } else {
        out << "atoms: " << csv(gens.values()) << '\n'
            << "x: " << opt.x << '\n'
            << "computed AS: " << computed.str() << '\n'
            << "expected AS: " << expected.str() << '\n'
            << "atoms minimal: " << (minimal ? "yes" : "no") << '\n'
            << "count: " << count << '\n';
        for (const std::string& d : details) out << "detail: " << d << '\n';
        out << "verdict: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : 1;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    SweepSpec spec;
    spec.construction = parse_construction(opt.construction);
    const auto add_range = [&](const char* name, const std::string& text) {
        if (!text.empty()) spec.ranges.emplace_back(name, parse_sweep_range(text));
    };
    add_range("r", opt.range_r);
    add_range("n", opt.range_n);
    add_range("k", opt.range_k);
    add_range("t", opt.range_t);

    const SweepSummary summary = sweep_verify(spec);
    if (opt.json) {
        json reports = json::array();
        for (const VerificationReport& rep : summary.reports) {
            json o = json::object();
            for (const auto& [name, value] : rep.subject.params) o[name] = value;
            reports.push_back(json{{"params", o},
                                   {"verdict", rep.passed() ? "pass" : "fail"},
                                   {"as", rep.computed_as.values()},
                                   {"count", rep.factorization_count}});
        }
        out << json{{"construction", construction_name(spec.construction)},
                    {"reports", reports},
                    {"passed", summary.passed},
                    {"failed", summary.failed},
                    {"skipped", summary.skipped}}
                   .dump()
            << '\n';
    } else {
        for (const VerificationReport& rep : summary.reports)
            out << params_line(rep.subject.params) << ' '
                << (rep.passed() ? "PASS" : "FAIL") << " AS=" << rep.computed_as.str()
                << " count=" << rep.factorization_count << '\n';
        out << "passed=" << summary.passed << " failed=" << summary.failed
            << " skipped=" << summary.skipped << '\n';
    }
    return summary.failed > 0 ? 1 : 0;
}

int cmd_search(const Options& opt, std::ostream& out, std::ostream& err) {
    const LengthSet target = LengthSet::parse(opt.sigma);
    const SearchSpace space = make_space(opt);
    const int64_t limit =
        opt.limit > 0 ? opt.limit : std::numeric_limits<int64_t>::max();

    std::optional<std::vector<int64_t>> resume;
    if (!opt.checkpoint.empty()) {
        std::ifstream in(opt.checkpoint);
        std::string line;
        if (in && std::getline(in, line) && !line.empty())
            resume = parse_int64_list(line);
    }
    SemigroupDoneHook done;
    if (!opt.checkpoint.empty())
        done = [&](const NumericalSemigroup& s) {
            std::ofstream f(opt.checkpoint, std::ios::trunc);
            f << csv(s.atoms()) << '\n';
        };

    const std::vector<CatalogEntry> hits =
        find_realizations(target, space, limit, resume, done);
    for (const CatalogEntry& e : hits) {
        if (opt.json)
            out << to_json(e).dump() << '\n';
        else
            out << "atoms=" << csv(e.semigroup.atoms()) << " x=" << e.element
                << " AS=" << e.as_set.str() << '\n';
    }
    err << "# space: max_mult=" << space.max_multiplicity
        << " max_gen=" << space.max_generator << " max_embdim=" << space.max_embdim
        << " max_x=" << space.max_element << "; found=" << hits.size() << '\n';
    return opt.require_hit && hits.empty() ? 1 : 0;
}

int cmd_minimal(const Options& opt, std::ostream& out, std::ostream& err) {
    const LengthSet target = LengthSet::parse(opt.sigma);
    const SearchSpace space = make_space(opt);
    MinimalOrder order;
    if (opt.order == "x")
        order = MinimalOrder::element_genus_lex;
    else if (opt.order == "genus")
        order = MinimalOrder::genus_element_lex;
    else if (opt.order == "lex")
        order = MinimalOrder::lex_element;
    else
        throw Error(errc::invalid_input,
                    "unknown order '" + opt.order + "' (expected x, genus or lex)");

    const std::optional<CatalogEntry> best = minimal_realization(target, space, order);
    err << "# space: max_mult=" << space.max_multiplicity
        << " max_gen=" << space.max_generator << " max_embdim=" << space.max_embdim
        << " max_x=" << space.max_element << '\n';
    if (!best) {
        out << (opt.json ? json(nullptr).dump() : "none within bounds") << '\n';
        return 1;
    }
    if (opt.json)
        out << to_json(*best).dump() << '\n';
    else
        out << "atoms=" << csv(best->semigroup.atoms()) << " x=" << best->element
            << " AS=" << best->as_set.str() << " genus=" << best->semigroup.genus()
            << '\n';
    return 0;
}

int cmd_catalog(const Options& opt, std::ostream& out) {
    NumericalSemigroup S{GeneratorSet::parse(opt.gens)};
    const auto table = catalog_length_sets(S, opt.to);
    if (opt.json) {
        json arr = json::array();
        for (const auto& [x, as] : table)
            arr.push_back(json{{"x", x}, {"as", as.values()}});
        out << arr.dump() << '\n';
    } else {
        for (const auto& [x, as] : table) out << "AS(" << x << ") = " << as.str() << '\n';
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"addendization sets AS(x) in numerical semigroups"};
    app.require_subcommand(1);
    Options opt;

    const auto add_gens = [&](CLI::App* sub) {
        sub->add_option("--gens", opt.gens, "comma-separated generators, e.g. 3,7,8")
            ->required();
    };
    const auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "machine-readable output");
    };
    const auto add_space = [&](CLI::App* sub) {
        sub->add_option("--max-gen", opt.max_gen, "largest allowed atom")->required();
        sub->add_option("--max-x", opt.max_x, "largest candidate element")->required();
        sub->add_option("--max-mult", opt.max_mult,
                        "largest allowed multiplicity (default: max-gen)");
        sub->add_option("--max-embdim", opt.max_embdim,
                        "largest allowed number of atoms (default: max-gen)");
    };

    CLI::App* atoms = app.add_subcommand("atoms", "minimal generating set");
    add_gens(atoms);
    add_json(atoms);

    CLI::App* frobenius = app.add_subcommand("frobenius", "largest non-member");
    add_gens(frobenius);
    add_json(frobenius);

    CLI::App* gaps = app.add_subcommand("gaps", "all non-members");
    add_gens(gaps);
    add_json(gaps);

    CLI::App* contains = app.add_subcommand("contains", "membership test");
    add_gens(contains);
    contains->add_option("--x", opt.x, "element to test")->required();
    add_json(contains);

    CLI::App* factorize =
        app.add_subcommand("factorize", "all decompositions of x into atoms");
    add_gens(factorize);
    factorize->add_option("--x", opt.x, "element to factor")->required();
    add_json(factorize);

    CLI::App* as_cmd = app.add_subcommand("as", "addendization set AS(x)");
    add_gens(as_cmd);
    as_cmd->add_option("--x", opt.x, "element")->required();
    add_json(as_cmd);

    CLI::App* realize_cmd = app.add_subcommand(
        "realize", "construct a semigroup and element with AS(x) = sigma");
    realize_cmd->add_option("--sigma", opt.sigma, "target length set, e.g. 3,5,7");
    realize_cmd->add_option("--construction", opt.construction,
                            "build one family directly instead of dispatching");
    realize_cmd->add_option("--n", opt.n, "construction parameter n");
    realize_cmd->add_option("--k", opt.k, "construction parameter k");
    realize_cmd->add_option("--t", opt.t, "construction parameter t");
    realize_cmd->add_option("--r", opt.r, "construction parameter r");
    realize_cmd->add_flag("--verify", opt.verify_flag,
                          "re-derive AS(x) by enumeration and report a verdict");
    add_json(realize_cmd);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check that AS(x) in <gens> equals sigma and gens are atoms");
    add_gens(verify_cmd);
    verify_cmd->add_option("--x", opt.x, "element")->required();
    verify_cmd->add_option("--sigma", opt.sigma, "expected AS(x)")->required();
    verify_cmd->add_option("--count", opt.expected_count,
                           "expected number of factorizations");
    add_json(verify_cmd);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "verify a construction over parameter ranges");
    sweep->add_option("--construction", opt.construction, "family to sweep")
        ->required();
    sweep->add_option("--n", opt.range_n, "range lo..hi, e.g. 3..10");
    sweep->add_option("--k", opt.range_k, "range lo..hi");
    sweep->add_option("--t", opt.range_t, "range lo..hi; endpoints may be anchored, e.g. n+1..n+4");
    sweep->add_option("--r", opt.range_r, "range lo..hi");
    add_json(sweep);

    CLI::App* search = app.add_subcommand(
        "search", "scan a bounded space for elements with AS(x) = sigma");
    search->add_option("--sigma", opt.sigma, "target length set")->required();
    add_space(search);
    search->add_option("--limit", opt.limit, "stop after this many hits");
    search->add_option("--checkpoint", opt.checkpoint,
                       "file recording the last fully scanned semigroup");
    search->add_flag("--require-hit", opt.require_hit,
                     "exit 1 when nothing is found");
    add_json(search);

    CLI::App* minimal = app.add_subcommand(
        "minimal", "least in-space realization of sigma");
    minimal->add_option("--sigma", opt.sigma, "target length set")->required();
    add_space(minimal);
    minimal->add_option("--order", opt.order, "x | genus | lex (default x)");
    add_json(minimal);

    CLI::App* catalog = app.add_subcommand("catalog", "table of AS(x) for x <= bound");
    add_gens(catalog);
    catalog->add_option("--to", opt.to, "largest element to tabulate")->required();
    add_json(catalog);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("addset");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(atoms)) return cmd_atoms(opt, out);
        if (app.got_subcommand(frobenius)) return cmd_frobenius(opt, out);
        if (app.got_subcommand(gaps)) return cmd_gaps(opt, out);
        if (app.got_subcommand(contains)) return cmd_contains(opt, out);
        if (app.got_subcommand(factorize)) return cmd_factorize(opt, out);
        if (app.got_subcommand(as_cmd)) return cmd_as(opt, out);
        if (app.got_subcommand(realize_cmd)) return cmd_realize(opt, out);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(opt, out);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt, out);
        if (app.got_subcommand(search)) return cmd_search(opt, out, err);
        if (app.got_subcommand(minimal)) return cmd_minimal(opt, out, err);
        if (app.got_subcommand(catalog)) return cmd_catalog(opt, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == errc::arithmetic_overflow ? 3 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace addset::cli
