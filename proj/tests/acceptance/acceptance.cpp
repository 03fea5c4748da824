// Acceptance suite: one verdict line per criterion, exit 0 iff every check
// passes except the known expected failures, which must still fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hooklab/config.hpp"
#include "hooklab/dcomplete_maps.hpp"
#include "hooklab/diagram_bijection.hpp"
#include "hooklab/bijection_shifted.hpp"
#include "hooklab/tableaux.hpp"
#include "hooklab/weighted.hpp"

using namespace hooklab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    std::string what;
    bool ok = false;
    bool expected_failure = false;
    std::string detail;
};

struct Criterion {
    int number = 0;
    std::string title;
    std::vector<Check> checks;
    double elapsed = 0;

    void add(std::string what, bool ok, std::string detail = {}) {
        checks.push_back({std::move(what), ok, false, std::move(detail)});
    }
    void add_expected_failure(std::string what, bool ok, std::string detail) {
        checks.push_back({std::move(what), ok, true, std::move(detail)});
    }
};

std::string str(const BigInt& v) { return v.str(); }

std::shared_ptr<const Diagram> diagram(std::vector<int> parts, bool shifted) {
    return std::make_shared<const Diagram>(Partition(std::move(parts)), shifted);
}

struct Shape {
    std::vector<int> parts;
    bool shifted;
};

const std::vector<Shape>& exhaustive_set() {
    static const std::vector<Shape> s = {
        {{2, 1}, true},    {{3, 1}, true},    {{3, 2}, true}, {{3, 2, 1}, true},
        {{4, 2, 1}, true}, {{4, 3, 1}, true}, {{2, 2}, false}, {{3, 2, 2}, false},
    };
    return s;
}

std::string shape_name(const Shape& s) {
    return (s.shifted ? "shifted " : "ordinary ") + Partition(s.parts).to_string();
}

// 1
void counting(Criterion& c) {
    const auto t0 = Clock::now();
    struct Case {
        std::vector<int> parts;
        bool shifted;
        int expected;
    };
    for (const Case& k : {Case{{3, 2, 2}, false, 21}, Case{{5, 3, 2}, true, 54}}) {
        const Partition l(k.parts);
        const BigInt h = count_hlf(l, k.shifted).value, b = count_brute(l, k.shifted).value;
        c.add((k.shifted ? "f*" : "f") + l.to_string(), h == k.expected && b == k.expected,
              "hlf " + str(h) + ", brute " + str(b));
    }
    const double t = seconds_since(t0);
    c.add("under 1 s", t < 1.0, std::to_string(t) + " s");
}

// 2
void hook_formulas(Criterion& c) {
    const auto t0 = Clock::now();
    std::uint64_t cells = 0, mismatches = 0;
    for (int n = 1; n <= 14; ++n)
        for (const auto& l : strict_partitions_of(n)) {
            const Diagram d(l, true);
            for (Cell z : d.cells()) {
                ++cells;
                if (d.hook_length(z) != static_cast<int>(d.hook_cells(z).size())) ++mismatches;
            }
        }
    c.add("closed form = walk, strict n <= 14", mismatches == 0,
          std::to_string(cells) + " cells, " + std::to_string(mismatches) + " mismatches");
    const int h23 = Diagram(Partition({6, 6, 5, 3, 2}), false).hook_length({2, 3});
    c.add("h_23(66532) = 6", h23 == 6, std::to_string(h23));
    const int h13 = Diagram(Partition({8, 7, 5, 3, 2}), true).hook_length({1, 3});
    c.add("h*_13(87532) = 11", h13 == 11, std::to_string(h13));
    const double t = seconds_since(t0);
    c.add("under 10 s", t < 10.0, std::to_string(t) + " s");
}

// 3
void branching_by_counting(Criterion& c) {
    const auto t0 = Clock::now();
    auto run = [&](bool shifted, int max_n) {
        std::uint64_t shapes = 0, bad = 0, total = 0;
        std::string first_bad;
        for (int n = 1; n <= max_n; ++n)
            for (const auto& l : shifted ? strict_partitions_of(n) : partitions_of(n)) {
                auto d = std::make_shared<const Diagram>(l, shifted);
                std::uint64_t f = 0, g = 0;
                auto fs = enumerate_F(d);
                while (fs.next()) ++f;
                for (Cell corner : d->corners()) {
                    auto gs = enumerate_G(d, corner);
                    while (gs.next()) ++g;
                }
                ++shapes;
                total += f;
                if (f != g) {
                    if (bad++ == 0) first_bad = l.to_string();
                }
            }
        c.add(std::string(shifted ? "strict n <= " : "ordinary n <= ") + std::to_string(max_n), bad == 0,
              std::to_string(shapes) + " shapes, " + std::to_string(total) + " arrangements" +
                  (bad ? ", first mismatch " + first_bad : ""));
    };
    run(true, 10);
    run(false, 8);
    const double t = seconds_since(t0);
    c.add("under 5 min", t < 300.0, std::to_string(t) + " s");
}

// 4
void round_trips(Criterion& c) {
    for (const Shape& s : exhaustive_set()) {
        const DiagramBijection db(Diagram(Partition(s.parts), s.shifted));
        const RoundTripReport r = roundtrip_exhaustive(db.bijection());
        const bool onto = BigInt(r.distinct_images) == f_space_size(db.diagram());
        c.add(shape_name(s), r.pass() && onto,
              std::to_string(r.g_checked) + " G, " + std::to_string(r.f_checked) + " F, " +
                  std::to_string(r.failures) + " failures");
    }
    for (const Shape& s : {Shape{{5, 3, 2}, true}, Shape{{8, 7, 5, 3, 2}, true}}) {
        const DiagramBijection db(Diagram(Partition(s.parts), s.shifted));
        std::mt19937_64 rng(kDefaultSeed);
        const RoundTripReport r = roundtrip_sampled(db.bijection(), 100000, rng);
        c.add(shape_name(s) + " sampled", r.pass() && r.g_checked + r.f_checked >= 100000,
              std::to_string(r.g_checked) + " G, " + std::to_string(r.f_checked) + " F, " +
                  std::to_string(r.failures) + " failures");
    }
}

// 5
void properties(Criterion& c) {
    for (const Shape& s : exhaustive_set()) {
        const DiagramBijection db(Diagram(Partition(s.parts), s.shifted));
        PropertyReport total;
        for (Cell corner : db.diagram().corners()) total.merge(verify_properties_exhaustive(db.maps(corner), true));
        c.add(shape_name(s), total.pass() && total.p3_pairs > 0,
              std::to_string(total.arrangements) + " arrangements, " + std::to_string(total.p3_pairs) +
                  " (G',z) pairs with exactly one preimage checked, failures p1/p2/p3/inv " +
                  std::to_string(total.p1_failures) + "/" + std::to_string(total.p2_failures) + "/" +
                  std::to_string(total.p3_failures) + "/" + std::to_string(total.inverse_failures));
    }
}

// 6
void snake_flip(Criterion& c) {
    const auto d = diagram({4, 3, 1}, true);
    std::uint64_t flipped = 0, bad = 0, identity_checked = 0, identity_bad = 0;
    for (Cell corner : d->corners()) {
        const int r = corner.row, s = corner.col;
        std::vector<Labels> space;
        auto st = enumerate_G(d, corner);
        while (st.next()) space.push_back(st.labels());
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (r - 1)); ++m) {
            const IndexSet I(m << 1);
            std::vector<Labels> left, right, image;
            for (const Labels& g : space) {
                if (in_left_snakes(*d, corner, g, I)) left.push_back(g);
                if (in_right_snakes(*d, corner, g, I)) right.push_back(g);
            }
            for (const Labels& g : left) {
                const Labels f = flip_snake(*d, corner, g, I);
                ++flipped;
                bool ok = in_right_snakes(*d, corner, f, I) && flip_snake_inverse(*d, corner, f, I) == g;
                for (int z = 0; z < d->size(); ++z) {
                    const Cell zc = d->cell(z);
                    const bool support = I.contains(zc.row) && (zc.col == r - 1 || zc.col == s);
                    if (!support && f[static_cast<std::size_t>(z)] != g[static_cast<std::size_t>(z)]) ok = false;
                }
                if (!ok) ++bad;
                image.push_back(f);
            }
            std::sort(image.begin(), image.end());
            std::sort(right.begin(), right.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end() || image != right) ++bad;
            if (I.size() <= 1)
                for (const Labels& g : space) {
                    ++identity_checked;
                    if (flip_snake(*d, corner, g, I) != g || flip_snake_inverse(*d, corner, g, I) != g)
                        ++identity_bad;
                }
        }
    }
    c.add("bijective and local on shifted 431", bad == 0 && flipped > 0,
          std::to_string(flipped) + " flips, " + std::to_string(bad) + " failures");
    c.add("identity for |I| <= 1", identity_bad == 0,
          std::to_string(identity_checked) + " arrangements, " + std::to_string(identity_bad) + " failures");
}

// 7
void weighted(Criterion& c) {
    const auto t0 = Clock::now();
    const Partition lambda({9, 8, 7, 5, 4, 3, 1});
    const int nv = weight_variable_count(lambda);
    auto x = MultiPoly::variable(nv, 0);
    auto y = [&](int t) { return MultiPoly::variable(nv, t); };
    auto k = [&](int v) { return MultiPoly::constant(nv, v); };
    const auto names = weight_variable_names(lambda);
    const MultiPoly h24 = weighted_punctured_hook(lambda, {2, 4}).poly;
    c.add("H_24(9875431) = 6x+2y1+2y2+y3", h24 == k(6) * x + k(2) * y(1) + k(2) * y(2) + y(3), h24.to_string(names));
    const MultiPoly h17 = weighted_punctured_hook(lambda, {1, 7}).poly;
    c.add_expected_failure("H_17(9875431) = 6x+y1+y2", h17 == k(6) * x + y(1) + y(2),
                           "got " + h17.to_string(names) + " under the convention that satisfies the identities");

    std::uint64_t shapes = 0, bad = 0;
    std::string first_bad;
    for (int n = 1; n <= 9; ++n)
        for (const auto& l : strict_partitions_of(n)) {
            ++shapes;
            const IdentityReport w = verify_weighted(l);
            const IdentityReport v = verify_vars(l);
            if (!w.pass() || !v.pass())
                if (bad++ == 0) first_bad = l.to_string();
        }
    c.add("three identities and their x=y=1 degenerations, strict n <= 9", bad == 0,
          std::to_string(shapes) + " shapes" + (bad ? ", first failure " + first_bad : ""));
    const double t = seconds_since(t0);
    c.add("under 5 min", t < 300.0, std::to_string(t) + " s");
}

// 8
void variants(Criterion& c) {
    std::uint64_t runs = 0, bad = 0, m1_bad = 0;
    std::string first_bad;
    for (int n = 1; n <= 9; ++n)
        for (const auto& l : strict_partitions_of(n)) {
            const IdentityReport vars = verify_vars(l);
            std::string third;
            for (const auto& ch : vars.checks)
                if (ch.identity == "identity-3") third = ch.rhs;
            for (int m = 1; m <= l.part(1); ++m) {
                ++runs;
                const IdentityReport r = verify_variant_m(l, m);
                if (!r.pass())
                    if (bad++ == 0) first_bad = l.to_string() + " m=" + std::to_string(m);
                if (m == 1)
                    for (const auto& ch : r.checks)
                        if (ch.identity == "variant-m-corrected" && ch.rhs != third) ++m1_bad;
            }
        }
    c.add("variant-m, strict n <= 9, all m", bad == 0,
          std::to_string(runs) + " (lambda, m) pairs" + (bad ? ", first failure " + first_bad : ""));
    c.add("m = 1 equals the third identity", m1_bad == 0, std::to_string(m1_bad) + " mismatches");

    const Adjudication a = adjudicate_corollary_reading(9);
    std::string passing;
    for (const auto& p : a.passing) passing += (passing.empty() ? "" : ",") + p;
    c.add("recursion corollary holds under exactly one reading", a.passing.size() == 1,
          "passing: " + passing);
    const IdentityReport r = verify_recursion_corollary(Partition({5, 3, 2}));
    const bool named = r.details.contains("reading") && a.passing.size() == 1 &&
                       r.details.at("reading") == a.passing.front();
    c.add("report names the reading", named && r.pass(), r.details.dump());
}

// 9
struct PosetCase {
    std::string expr;
    DPoset poset;
};

void survey(Criterion& c, const std::string& label, const std::vector<PosetCase>& cases) {
    std::uint64_t bad_branching = 0, bad_conjecture = 0, reports = 0;
    std::string first_bad;
    for (const PosetCase& pc : cases) {
        const auto br = check_branching_dcomplete(pc.poset);
        if (!br.equal && bad_branching++ == 0 && first_bad.empty()) first_bad = pc.expr;
        for (const auto& rep : verify_conjecture_all(pc.poset)) {
            ++reports;
            if (!rep.pass() && bad_conjecture++ == 0 && first_bad.empty()) first_bad = pc.expr + " at " + rep.corner;
        }
    }
    c.add(label, bad_branching == 0 && bad_conjecture == 0 && !cases.empty(),
          std::to_string(cases.size()) + " posets, " + std::to_string(reports) + " minimal elements" +
              (first_bad.empty() ? "" : ", first failure " + first_bad));
}

std::string sorted_hooks(const DPoset& p) {
    std::vector<int> h;
    for (const auto& e : hook_lengths_dcomplete(p)) h.push_back(e.hook_length);
    std::sort(h.begin(), h.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "{") << h[i];
    os << "}";
    return os.str();
}

void dcomplete(Criterion& c) {
    const std::string d3 = sorted_hooks(build_diamond(3)), d4 = sorted_hooks(build_diamond(4));
    c.add("d3 hooks {1,2,2,3}", d3 == "{1,2,2,3}", d3);
    c.add("d4 hooks {1,2,3,3,4,5}", d4 == "{1,2,3,3,4,5}", d4);
    const DPoset d5 = build_diamond(5);
    const BigInt brute = count_linear_extensions(d5), formula = hook_formula_count(d5);
    c.add_expected_failure("f(d5) = 4", brute == 4 && formula == 4,
                           "brute " + str(brute) + ", n!/prod h " + str(formula));
    c.add("f(d5): brute force = n!/prod h", brute == formula, str(brute));

    std::vector<PosetCase> diamonds;
    for (int k = 3; k <= 6; ++k) diamonds.push_back({"diamond:" + std::to_string(k), build_diamond(k)});
    survey(c, "diamonds k <= 6", diamonds);

    const std::vector<std::string> bases = {"chain:1",       "chain:2",      "chain:3",      "diamond:3",
                                            "diamond:4",     "diamond:5",    "diagram:2,1",  "diagram:2,2",
                                            "diagram:3,1",   "diagram:2,1,1", "shifted:3,1", "shifted:3,2,1"};
    std::vector<DPoset> parsed;
    for (const auto& b : bases) parsed.push_back(parse_poset(b));

    std::vector<PosetCase> unions, slants;
    std::uint64_t rejected = 0;
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i; j < bases.size(); ++j) {
            if (parsed[i].size() + parsed[j].size() > 12) continue;
            unions.push_back({"union(" + bases[i] + "," + bases[j] + ")", disjoint_union(parsed[i], parsed[j])});
        }
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = 0; j < bases.size(); ++j) {
            const DPoset& a = parsed[i];
            const DPoset& b = parsed[j];
            if (a.size() + b.size() > 12) continue;
            for (int u = 0; u < a.size(); ++u) {
                DPoset p = slant_sum(a, u, b);
                if (!verify_dcomplete(p).pass()) {
                    ++rejected;
                    continue;
                }
                slants.push_back({"slant(" + bases[i] + "@" + a.name(u) + "," + bases[j] + ")", std::move(p)});
            }
        }
    survey(c, "disjoint unions n <= 12", unions);
    survey(c, "slant sums n <= 12 (" + std::to_string(rejected) + " non-d-complete candidates skipped)", slants);
}

bool run(int number, std::string title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    c.number = number;
    c.title = std::move(title);
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.add("no exception", false, e.what());
    }
    c.elapsed = seconds_since(t0);

    bool unexpected = false, expected = false;
    for (const Check& k : c.checks) {
        if (k.expected_failure) {
            if (k.ok) unexpected = true;
            else expected = true;
        } else if (!k.ok) {
            unexpected = true;
        }
    }
    const char* verdict = unexpected ? "FAIL" : (expected ? "FAIL (expected)" : "PASS");
    std::printf("criterion %d %s: %s [%.2f s]\n", c.number, c.title.c_str(), verdict, c.elapsed);
    for (const Check& k : c.checks) {
        const char* tag = k.expected_failure ? (k.ok ? "XPASS" : "xfail") : (k.ok ? "ok" : "FAIL");
        std::printf("    %-5s %s: %s\n", tag, k.what.c_str(), k.detail.c_str());
    }
    std::fflush(stdout);
    return !unexpected;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run(1, "counting oracles", counting);
    ok &= run(2, "hook formulas", hook_formulas);
    ok &= run(3, "branching by counting", branching_by_counting);
    ok &= run(4, "bijection round trips", round_trips);
    ok &= run(5, "properties P1-P3", properties);
    ok &= run(6, "snake flip", snake_flip);
    ok &= run(7, "weighted identities", weighted);
    ok &= run(8, "variant identities", variants);
    ok &= run(9, "d-complete layer", dcomplete);
    std::printf("%s\n", ok ? "acceptance: all criteria met apart from expected failures"
                           : "acceptance: unexpected failures");
    return ok ? 0 : 1;
}
