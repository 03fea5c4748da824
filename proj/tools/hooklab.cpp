#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hooklab/bijection.hpp"
#include "hooklab/config.hpp"
#include "hooklab/dcomplete_maps.hpp"
#include "hooklab/diagram_bijection.hpp"
#include "hooklab/dposet.hpp"
#include "hooklab/shapes.hpp"
#include "hooklab/tableaux.hpp"
#include "hooklab/weighted.hpp"

using namespace hooklab;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Output {
    bool json_mode = false;

    int finish(const json& j, const std::string& human, bool pass) const {
        if (json_mode) std::cout << j.dump(2) << '\n';
        else std::cout << human;
        return pass ? kPass : kFail;
    }
};

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

Partition read_partition(const std::string& text, bool shifted) {
    return shifted ? parse_strict_partition(text).partition() : parse_partition(text);
}

Cell parse_cell(const std::string& text) {
    int r = 0, c = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> r >> comma >> c) || comma != ',' || !in.eof())
        throw UsageError("cell must be given as ROW,COL: '" + text + "'");
    return {r, c};
}

// ---- hooks ---------------------------------------------------------------

int cmd_hooks(const Output& out, const std::string& text, bool shifted) {
    const Diagram d(read_partition(text, shifted), shifted);
    json rows = json::array();
    std::ostringstream h;
    for (int i = 1; i <= d.rows(); ++i) {
        json row = json::array();
        h << std::string(static_cast<std::size_t>(3 * (d.row_start(i) - 1)), ' ');
        for (int j = d.row_start(i); j <= d.row_end(i); ++j) {
            const int v = d.hook_length({i, j});
            row.push_back(v);
            h << (v < 10 ? "  " : " ") << v;
        }
        rows.push_back(row);
        h << '\n';
    }
    json corners = json::array();
    for (Cell c : d.corners()) corners.push_back(to_json(c));
    const json j = {{"partition", d.partition().to_string()}, {"shifted", shifted}, {"hooks", rows},
                    {"corners", corners}, {"pass", true}};
    return out.finish(j, h.str(), true);
}

// ---- count ---------------------------------------------------------------

int cmd_count(const Output& out, const std::string& text, bool shifted, const std::string& method) {
    const Partition lambda = read_partition(text, shifted);
    std::vector<TableauCount> results;
    if (method != "brute") results.push_back(count_hlf(lambda, shifted));
    if (method != "hlf") results.push_back(count_brute(lambda, shifted));
    bool agree = true;
    json values = json::object();
    std::ostringstream h;
    for (const auto& r : results) {
        agree = agree && r.value == results.front().value;
        values[to_string(r.method)] = r.value.str();
        h << to_string(r.method) << ' ' << r.value.str() << '\n';
    }
    if (results.size() > 1) h << (agree ? "agree\n" : "MISMATCH\n");
    const json j = {{"partition", lambda.to_string()}, {"shifted", shifted}, {"counts", values}, {"pass", agree}};
    return out.finish(j, h.str(), agree);
}

// ---- bijection -----------------------------------------------------------

struct BijectionArgs {
    std::string partition;
    bool plain = false;
    bool exhaustive = false;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = kDefaultSeed;
    bool trace = false;
    std::string corner;
};

json cell_list(const Diagram& d) {
    json a = json::array();
    for (Cell c : d.corners()) a.push_back(to_json(c));
    return a;
}

int cmd_bijection_trace(const Output& out, const DiagramBijection& db, const BijectionArgs& a) {
    const Diagram& d = db.diagram();
    const Cell corner = a.corner.empty() ? d.corners().front() : parse_cell(a.corner);
    if (!d.is_corner(corner)) throw UsageError(to_string(corner) + " is not a corner");
    std::mt19937_64 rng(a.seed);
    // Keep the draw with the most dots so the chain is not trivial.
    const LabelDomains dom = g_domains(d, corner);
    GArrangement g{corner, sample_labels(dom, rng)};
    for (int i = 1; i < 256; ++i) {
        Labels cand = sample_labels(dom, rng);
        if (dot_count(cand) > dot_count(g.labels)) g.labels = std::move(cand);
    }
    const auto chain = db.trace(g);
    const FArrangement f = db.phi(g);
    const GArrangement back = db.phi_inverse(f);
    const bool ok = back.corner == g.corner && back.labels == g.labels;

    json steps = json::array();
    std::ostringstream h;
    h << "corner " << to_string(corner) << ", seed " << a.seed << '\n';
    for (std::size_t i = 0; i < chain.size(); ++i) {
        steps.push_back(json(to_json(d, chain[i])));
        h << "e^" << i << ": " << labels_to_string(chain[i].labels) << "  (dots "
          << dot_count(chain[i].labels) << ")\n";
    }
    h << "phi: start " << to_string(f.start) << ' ' << labels_to_string(f.labels) << '\n';
    h << "inverse round trip: " << verdict(ok) << '\n';
    const json j = {{"partition", d.partition().to_string()},
                    {"shifted", d.shifted()},
                    {"seed", a.seed},
                    {"chain", steps},
                    {"phi", json(to_json(d, f))},
                    {"pass", ok}};
    return out.finish(j, h.str(), ok);
}

int cmd_bijection(const Output& out, const BijectionArgs& a) {
    const bool shifted = !a.plain;
    const Diagram d(read_partition(a.partition, shifted), shifted);
    const DiagramBijection db(d);
    if (a.trace) return cmd_bijection_trace(out, db, a);

    const BigInt f_space = f_space_size(d);
    const bool fits = f_space <= BigInt(max_enumeration());
    if (a.exhaustive && !fits)
        throw UsageError("space of size " + f_space.str() + " exceeds the enumeration bound; use --sample");
    const bool exhaustive = a.exhaustive || (!a.sample && fits);
    const std::uint64_t samples = a.sample.value_or(10000);

    RoundTripReport rt;
    json props = json::object();
    bool pass = true;
    std::mt19937_64 rng(a.seed);
    if (exhaustive) rt = roundtrip_exhaustive(db.bijection());
    else rt = roundtrip_sampled(db.bijection(), samples, rng);
    pass = rt.pass();

    std::ostringstream h;
    h << (shifted ? "shifted " : "ordinary ") << d.partition().to_string() << ", "
      << (exhaustive ? "exhaustive" : "sampled (" + std::to_string(samples) + ", seed " + std::to_string(a.seed) + ")")
      << '\n';
    h << "round trip: " << rt.g_checked << " G, " << rt.f_checked << " F, " << rt.failures << " failures  "
      << verdict(rt.pass()) << '\n';
    for (Cell c : d.corners()) {
        const CornerMaps& m = db.maps(c);
        PropertyReport pr;
        if (exhaustive) pr = verify_properties_exhaustive(m, g_space_size(d, c) <= BigInt(200000));
        else pr = verify_properties_sampled(m, samples, rng);
        pass = pass && pr.pass();
        props[to_string(c)] = pr.to_json();
        h << "corner " << to_string(c) << ": " << pr.arrangements << " arrangements, P1 " << pr.p1_failures
          << ", P2 " << pr.p2_failures << ", P3 " << pr.p3_failures << '/' << pr.p3_pairs << " pairs  "
          << verdict(pr.pass()) << '\n';
    }
    json j = {{"partition", d.partition().to_string()},
              {"shifted", shifted},
              {"mode", exhaustive ? "exhaustive" : "sample"},
              {"corners", cell_list(d)},
              {"roundtrip", rt.to_json()},
              {"properties", props},
              {"pass", pass}};
    if (!exhaustive) {
        j["seed"] = a.seed;
        j["samples"] = samples;
    }
    return out.finish(j, h.str(), pass);
}

// ---- verify --------------------------------------------------------------

void describe(std::ostringstream& h, const IdentityReport& r) {
    h << r.kind << ' ' << r.lambda.to_string() << ": " << verdict(r.pass()) << '\n';
    for (const auto& c : r.checks) {
        h << "  " << c.identity;
        if (c.corner) h << " at " << to_string(*c.corner);
        h << ": " << c.lhs << " = " << c.rhs << "  " << (c.informational ? "(info) " : "")
          << (c.pass ? "ok" : "differs") << '\n';
    }
    for (const auto& n : r.notes) h << "  note: " << n << '\n';
}

int cmd_verify(const Output& out, const std::string& kind, const std::string& text, std::optional<int> m,
               const std::string& convention, const std::string& reading) {
    const Partition lambda = parse_strict_partition(text).partition();
    std::vector<IdentityReport> reports;
    if (kind == "vars") {
        reports.push_back(verify_vars(lambda));
    } else if (kind == "weighted") {
        reports.push_back(verify_weighted(lambda, parse_hook_convention(convention)));
    } else if (kind == "variant-m") {
        if (m) reports.push_back(verify_variant_m(lambda, *m));
        else
            for (int v = 1; v <= lambda.part(1); ++v) reports.push_back(verify_variant_m(lambda, v));
    } else {
        CorollaryOptions o;
        o.reading = reading == "n" ? CorollaryReading::Size : CorollaryReading::LambdaOne;
        reports.push_back(verify_recursion_corollary(lambda, o));
    }
    bool pass = true;
    std::ostringstream h;
    for (const auto& r : reports) {
        pass = pass && r.pass();
        describe(h, r);
    }
    json j;
    if (reports.size() == 1) {
        j = reports.front().to_json();
    } else {
        j = {{"kind", kind}, {"partition", lambda.to_string()}, {"pass", pass}, {"reports", json::array()}};
        for (const auto& r : reports) j["reports"].push_back(r.to_json());
    }
    return out.finish(j, h.str(), pass);
}

// ---- dcomplete -----------------------------------------------------------

struct DcompleteArgs {
    std::string action;
    std::string poset;
    std::string corner;
    std::string method = "both";
    std::uint64_t samples = 20000;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t cap = 1000000;
};

std::string join_names(const DPoset& p, const std::vector<int>& ids) {
    std::string s;
    for (int v : ids) s += (s.empty() ? "" : " ") + p.name(v);
    return s;
}

int minimal_element(const DPoset& p, const std::string& name) {
    const int c = p.index(name);
    if (c < 0) throw UsageError("no element named '" + name + "'");
    if (p.lower_covers(c).size() != 0) throw UsageError("'" + name + "' is not a minimal element");
    return c;
}

// Prints the axiom report and returns false when p is not d-complete.
bool require_dcomplete(const Output& out, const DPoset& p, const DCompleteReport& rep) {
    if (rep.pass()) return true;
    std::cerr << "poset is not d-complete\n";
    std::ostringstream h;
    for (const auto& a : rep.axioms)
        for (const auto& w : a.witnesses) h << a.axiom << ": " << w << '\n';
    out.finish({{"poset", p.to_json()}, {"dcomplete", rep.to_json()}, {"pass", false}}, h.str(), false);
    return false;
}

int cmd_dcomplete(const Output& out, const DcompleteArgs& a) {
    const DPoset p = parse_poset(a.poset);
    const DCompleteReport rep = verify_dcomplete(p);
    std::ostringstream h;

    if (a.action == "build") {
        h << p.size() << " elements: " << join_names(p, [&] {
            std::vector<int> all;
            for (int v = 0; v < p.size(); ++v) all.push_back(v);
            return all;
        }()) << '\n';
        h << "covers:";
        for (auto [lo, hi] : p.covers()) h << ' ' << p.name(lo) << '<' << p.name(hi);
        h << "\nminimal: " << join_names(p, p.minimal()) << "\nmaximal: " << join_names(p, p.maximal()) << '\n';
        for (const auto& ax : rep.axioms) {
            h << ax.axiom << ' ' << verdict(ax.pass) << '\n';
            for (const auto& w : ax.witnesses) h << "  " << w << '\n';
        }
        h << "d-complete: " << (rep.pass() ? "yes" : "no") << '\n';
        return out.finish({{"poset", p.to_json()}, {"dcomplete", rep.to_json()}, {"pass", rep.pass()}}, h.str(),
                          rep.pass());
    }
    if (!require_dcomplete(out, p, rep)) return kFail;

    if (a.action == "hooks") {
        json items = json::array();
        for (const auto& hd : hook_lengths_dcomplete(p)) {
            std::vector<std::string> names;
            for (int w : hd.hook_set) names.push_back(p.name(w));
            items.push_back({{"element", p.name(hd.element)}, {"hook", hd.hook_length}, {"hook_set", names}});
            h << p.name(hd.element) << ": " << hd.hook_length << "  {" << join_names(p, hd.hook_set) << "}\n";
        }
        return out.finish({{"hooks", items}, {"pass", true}}, h.str(), true);
    }
    if (a.action == "count") {
        json values = json::object();
        std::optional<BigInt> first;
        bool agree = true;
        auto add = [&](const std::string& label, const BigInt& v) {
            values[label] = v.str();
            h << label << ' ' << v.str() << '\n';
            if (first) agree = agree && *first == v;
            else first = v;
        };
        if (a.method != "brute") add("hlf", hook_formula_count(p));
        if (a.method != "hlf") add("brute", count_linear_extensions(p));
        return out.finish({{"counts", values}, {"pass", agree}}, h.str(), agree);
    }
    if (a.action == "verify-branching") {
        const DBranchingReport br = check_branching_dcomplete(p);
        h << "n * prod(h-1) = " << br.lhs.str() << '\n';
        for (const auto& [c, v] : br.summands) h << "  corner " << c << ": " << v.str() << '\n';
        h << "sum = " << br.rhs.str() << "  " << verdict(br.equal) << '\n';
        json j = br.to_json();
        j["pass"] = br.equal;
        return out.finish(j, h.str(), br.equal);
    }
    if (a.action == "verify-conjecture") {
        ConjectureOptions o;
        o.samples = a.samples;
        o.seed = a.seed;
        std::vector<ConjectureReport> reps;
        if (a.corner.empty()) reps = verify_conjecture_all(p, o);
        else reps.push_back(verify_conjecture(p, minimal_element(p, a.corner), o));
        bool pass = true;
        json items = json::array();
        for (const auto& r : reps) {
            pass = pass && r.pass();
            items.push_back(r.to_json());
            h << "corner " << r.corner << ": ";
            if (!r.supported) {
                h << "unsupported (" << r.unsupported_reason << ")\n";
                continue;
            }
            const auto& pr = r.properties;
            h << (r.exhaustive ? "exhaustive, " : "sampled, ") << pr.arrangements << " arrangements, P1 "
              << pr.p1_failures << ", P2 " << pr.p2_failures << ", P3 " << pr.p3_failures << '/' << pr.p3_pairs
              << " pairs  " << verdict(r.pass()) << '\n';
        }
        return out.finish({{"corners", items}, {"pass", pass}}, h.str(), pass);
    }
    // explore
    json items = json::array();
    bool found = true;
    std::vector<int> corners = a.corner.empty() ? p.minimal() : std::vector<int>{minimal_element(p, a.corner)};
    for (int c : corners) {
        const StartSearchResult r = explore_start_maps(p, c, a.cap);
        found = found && r.found;
        json j = r.to_json();
        j["corner"] = p.name(c);
        items.push_back(j);
        h << "corner " << p.name(c) << ": " << (r.found ? "start map found" : "no start map found") << " after "
          << r.examined << " candidates" << (r.exhausted ? " (search exhausted)" : "") << '\n';
        for (const auto& [dots, s] : r.start) {
            std::string d;
            for (const auto& x : dots) d += (d.empty() ? "" : " ") + x;
            h << "  {" << d << "} -> " << s << '\n';
        }
    }
    return out.finish({{"corners", items}, {"pass", found}}, h.str(), found);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hooklab: hook length identities for (shifted) Young diagrams and d-complete posets"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json_mode, "Print a JSON report on stdout");

    std::string partition;
    bool shifted = false;

    auto* hooks = app.add_subcommand("hooks", "Hook lengths of every cell");
    hooks->add_option("partition", partition, "Parts, e.g. 5,3,2")->required();
    hooks->add_flag("--shifted", shifted, "Shifted diagram (strict partition)");

    std::string method = "both";
    auto* count = app.add_subcommand("count", "Number of standard (shifted) tableaux");
    count->add_option("partition", partition, "Parts, e.g. 5,3,2")->required();
    count->add_flag("--shifted", shifted, "Shifted diagram (strict partition)");
    count->add_option("--method", method, "hlf, brute or both")
        ->check(CLI::IsMember({"hlf", "brute", "both"}))
        ->capture_default_str();

    BijectionArgs ba;
    std::uint64_t sample = 0;
    auto* bij = app.add_subcommand("bijection", "Check the bijection: round trips and properties P1-P3");
    bij->add_option("partition", ba.partition, "Parts, e.g. 4,2,1")->required();
    bij->add_flag("--plain", ba.plain, "Ordinary diagram instead of shifted");
    auto* ex = bij->add_flag("--exhaustive", ba.exhaustive, "Enumerate every arrangement");
    auto* sm = bij->add_option("--sample", sample, "Number of random arrangements")->check(CLI::PositiveNumber);
    ex->excludes(sm);
    bij->add_option("--seed", ba.seed, "Random seed")->capture_default_str();
    bij->add_flag("--trace", ba.trace, "Print the e-chain of one random arrangement");
    bij->add_option("--corner", ba.corner, "Corner ROW,COL for --trace");

    std::string kind;
    std::optional<int> m;
    std::string convention = "a";
    std::string reading = "lambda1";
    auto* ver = app.add_subcommand("verify", "Check the hook identities on a strict partition");
    ver->add_option("identity", kind, "vars, weighted, variant-m or recursion")
        ->required()
        ->check(CLI::IsMember({"vars", "weighted", "variant-m", "recursion"}));
    ver->add_option("partition", partition, "Strict parts, e.g. 3,2,1")->required();
    ver->add_option("--m", m, "First-row column for variant-m (default: every m)");
    ver->add_option("--convention", convention, "Weighted hook convention a or b")
        ->check(CLI::IsMember({"a", "b"}))
        ->capture_default_str();
    ver->add_option("--reading", reading, "Recursion denominator reading: lambda1 or n")
        ->check(CLI::IsMember({"lambda1", "n"}))
        ->capture_default_str();

    DcompleteArgs da;
    auto* dc = app.add_subcommand("dcomplete", "d-complete posets built from a small expression language");
    dc->add_option("action", da.action, "build, hooks, count, verify-branching, verify-conjecture or explore")
        ->required()
        ->check(CLI::IsMember({"build", "hooks", "count", "verify-branching", "verify-conjecture", "explore"}));
    dc->add_option("poset", da.poset, "e.g. diamond:5, shifted:3,2,1, union(P,Q), slant(P@NAME,Q)")->required();
    dc->add_option("--corner", da.corner, "Minimal element (default: all)");
    dc->add_option("--method", da.method, "hlf, brute or both")
        ->check(CLI::IsMember({"hlf", "brute", "both"}))
        ->capture_default_str();
    dc->add_option("--samples", da.samples, "Samples when the space is too large to enumerate")
        ->capture_default_str();
    dc->add_option("--seed", da.seed, "Random seed")->capture_default_str();
    dc->add_option("--cap", da.cap, "Candidate limit for explore")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*hooks) return cmd_hooks(out, partition, shifted);
        if (*count) return cmd_count(out, partition, shifted, method);
        if (*bij) {
            if (*sm) ba.sample = sample;
            return cmd_bijection(out, ba);
        }
        if (*ver) return cmd_verify(out, kind, partition, m, convention, reading);
        return cmd_dcomplete(out, da);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}
