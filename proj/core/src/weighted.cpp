#include "hooklab/weighted.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hooklab/arrangements.hpp"
#include "hooklab/bijection_shifted.hpp"
#include "hooklab/config.hpp"

namespace hooklab {

std::string to_string(HookConvention c) { return c == HookConvention::A ? "a" : "b"; }

HookConvention parse_hook_convention(const std::string& s) {
    if (s == "a" || s == "A") return HookConvention::A;
    if (s == "b" || s == "B") return HookConvention::B;
    throw std::invalid_argument("convention must be a or b");
}

std::string to_string(VariantForm f) { return f == VariantForm::Corrected ? "corrected" : "uncorrected"; }

std::string to_string(CorollaryReading r) { return r == CorollaryReading::LambdaOne ? "lambda_1" : "n"; }

int weight_variable_count(const Partition& lambda) {
    if (lambda.length() == 0) return 1;
    return 1 + std::max(0, lambda.part(1) + 1 - lambda.length());
}

std::vector<std::string> weight_variable_names(const Partition& lambda) {
    std::vector<std::string> names{"x"};
    for (int t = 1; t < weight_variable_count(lambda); ++t) names.push_back("y" + std::to_string(t));
    return names;
}

namespace {

void require_strict(const Partition& lambda) {
    if (lambda.length() == 0 || !lambda.is_strict())
        throw std::invalid_argument("a non-empty strict partition is required");
}

struct Vars {
    int nv;
    MultiPoly x() const { return MultiPoly::variable(nv, 0); }
    // y_t, with y_t read as x for t <= 0
    MultiPoly y(int t) const {
        if (t <= 0) return x();
        if (t >= nv) throw std::logic_error("y index beyond the variable range");
        return MultiPoly::variable(nv, t);
    }
    MultiPoly one() const { return MultiPoly::constant(nv, 1); }
    MultiPoly c(const BigInt& v) const { return MultiPoly::constant(nv, v); }
};

BigInt h_or_one(const Diagram& d, int i, int j) { return d.hook_length_or_one({i, j}); }

// Product over non-corner cells outside row r and columns r-1, s.
template <typename T, typename F>
T rest_product(const Diagram& d, Cell c, T init, F&& f) {
    for (Cell z : d.cells()) {
        if (d.is_corner(z) || z.row == c.row || z.col == c.row - 1 || z.col == c.col) continue;
        init *= f(z);
    }
    return init;
}

}  // namespace

WeightedHook weighted_punctured_hook(const Partition& lambda, Cell z, HookConvention conv) {
    require_strict(lambda);
    Diagram d(lambda, true);
    if (!d.contains(z)) throw std::out_of_range("cell " + to_string(z) + " outside diagram");
    const Vars v{weight_variable_count(lambda)};
    const int l = lambda.length(), i = z.row, j = z.col;
    MultiPoly p(v.nv);
    if (j < l) {
        p += v.c(2 * l - 2 - i - j) * v.x();
        const int twice = lambda.part(j + 1) + j - l + 1;
        for (int t = 1; t <= twice; ++t) p += v.c(2) * v.y(t);
        for (int t = twice + 1; t <= lambda.part(i) + i - l; ++t) p += v.y(t);
    } else {
        int kmax = 0;
        for (int k = 1; k <= l; ++k) {
            const int e = j + 1 - k;
            if (lambda.part(k) >= e && e >= 1) kmax = k;
        }
        p += v.c(kmax - i) * v.x();
        int lo = j + 2 - l, hi = lambda.part(i) + i - l;
        if (conv == HookConvention::B) {
            --lo;
            --hi;
        }
        for (int t = lo; t <= hi; ++t) p += v.y(t);
    }
    return {z, std::move(p)};
}

nlohmann::json IdentityCheck::to_json() const {
    nlohmann::json j = {{"identity", identity}, {"lhs", lhs}, {"rhs", rhs}, {"pass", pass}};
    if (corner) j["corner"] = hooklab::to_json(*corner);
    if (informational) j["informational"] = true;
    return j;
}

bool IdentityReport::pass() const {
    for (const auto& c : checks)
        if (!c.informational && !c.pass) return false;
    return true;
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back(c.to_json());
    nlohmann::json j = {{"kind", kind}, {"partition", lambda.to_string()}, {"pass", pass()}, {"checks", cs}};
    if (!notes.empty()) j["notes"] = notes;
    if (!details.is_null()) j["details"] = details;
    return j;
}

namespace {

struct VarsSides {
    BigInt lhs[3];
    BigInt rhs[3];
};

VarsSides vars_sides(const Diagram& d) {
    const Partition& lambda = d.partition();
    const int n = d.size();
    BigInt full = 1;
    for (Cell z : d.cells())
        if (!d.is_corner(z)) full *= d.hook_length(z) - 1;
    VarsSides out;
    out.lhs[0] = n * full;
    out.lhs[1] = lambda.part(1) * full;
    out.lhs[2] = full;
    for (int k = 0; k < 3; ++k) out.rhs[k] = 0;
    for (Cell c : d.corners()) {
        const int r = c.row, s = c.col, R = r - 1;
        const BigInt rest = rest_product(d, c, BigInt(1), [&](Cell z) { return BigInt(d.hook_length(z) - 1); });
        auto col_prod = [&](int col, int from) {
            BigInt p = 1;
            for (int i = from; i <= r - 1; ++i) p *= h_or_one(d, i, col);
            return p;
        };
        auto row_prod = [&](int from) {
            BigInt p = 1;
            for (int j = from; j <= s - 1; ++j) p *= h_or_one(d, r, j);
            return p;
        };
        out.rhs[0] += rest * col_prod(s, 1) * row_prod(r) * col_prod(R, 1);
        out.rhs[1] += (h_or_one(d, 1, R) + h_or_one(d, 1, s) - 1) * rest * col_prod(s, 2) * row_prod(r) * col_prod(R, 2);
        const BigInt b3 = h_or_one(d, 1, s) * h_or_one(d, 2, R) + (h_or_one(d, 1, R) - 1) * (h_or_one(d, 2, s) - 1);
        out.rhs[2] += b3 * rest * col_prod(s, 3) * row_prod(std::max(r, 2)) * col_prod(R, 3);
    }
    return out;
}

const char* kIdentityNames[3] = {"identity-1", "identity-2", "identity-3"};

}  // namespace

IdentityReport verify_vars(const Partition& lambda) {
    require_strict(lambda);
    Diagram d(lambda, true);
    VarsSides v = vars_sides(d);
    IdentityReport rep;
    rep.kind = "vars";
    rep.lambda = lambda;
    for (int k = 0; k < 3; ++k)
        rep.checks.push_back({kIdentityNames[k], std::nullopt, v.lhs[k].str(), v.rhs[k].str(), v.lhs[k] == v.rhs[k]});
    return rep;
}

namespace {

struct WeightedSides {
    MultiPoly lhs[3];
    MultiPoly rhs[3];
};

WeightedSides weighted_sides(const Diagram& d, HookConvention conv) {
    const Partition& lambda = d.partition();
    const int l = lambda.length();
    const Vars v{weight_variable_count(lambda)};
    std::vector<MultiPoly> W;
    for (Cell z : d.cells()) W.push_back(weighted_punctured_hook(lambda, z, conv).poly);
    auto w = [&](int i, int j) -> const MultiPoly& {
        const int k = d.index({i, j});
        if (k < 0) throw std::logic_error("weighted hook requested outside the diagram");
        return W[static_cast<std::size_t>(k)];
    };
    MultiPoly full = v.one();
    for (Cell z : d.cells())
        if (!d.is_corner(z)) full *= w(z.row, z.col);
    WeightedSides out{{MultiPoly(v.nv), MultiPoly(v.nv), MultiPoly(v.nv)},
                      {MultiPoly(v.nv), MultiPoly(v.nv), MultiPoly(v.nv)}};
    MultiPoly sum1(v.nv);
    for (Cell z : d.cells()) sum1 += v.x() * v.y(z.col - l + 1);
    out.lhs[0] = sum1 * full;
    MultiPoly sum2 = v.c(l - 1) * v.x();
    for (int t = 1; t < v.nv; ++t) sum2 += v.y(t);
    out.lhs[1] = sum2 * full;
    out.lhs[2] = full;
    for (Cell c : d.corners()) {
        const int r = c.row, s = c.col, R = r - 1;
        const MultiPoly rest =
            rest_product(d, c, v.one(), [&](Cell z) -> const MultiPoly& { return w(z.row, z.col); });
        auto wx = [&](int i, int j) { return w(i, j) + v.x(); };
        auto col_prod = [&](int col, int from, int to) {
            MultiPoly p = v.one();
            for (int i = from; i <= to; ++i) p *= wx(i, col);
            return p;
        };
        auto row_part = [&](int jlo, int llo) {
            MultiPoly p = v.one();
            for (int j = jlo; j <= l - 1; ++j) p *= wx(r, j);
            for (int j = llo; j <= s; ++j) p *= w(r, j) + v.y(j - l + 1);
            return p;
        };
        out.rhs[0] += rest * col_prod(s, 1, r) * row_part(r, l) * col_prod(R, 1, r - 1);
        const MultiPoly b2 = r >= 2 ? w(1, R) + w(1, s) + v.x() : v.one();
        out.rhs[1] += rest * b2 * col_prod(s, 2, r) * row_part(r, l) * col_prod(R, 2, r - 1);
        MultiPoly b3 = v.one();
        if (r >= 3)
            b3 = wx(1, s) * wx(2, R) + w(1, R) * w(2, s);
        else if (r == 2)
            b3 = wx(1, s);
        out.rhs[2] += rest * b3 * col_prod(s, 3, r) * row_part(std::max(r, 2), std::max(l, 2)) * col_prod(R, 3, r - 1);
    }
    return out;
}

}  // namespace

IdentityReport verify_weighted(const Partition& lambda, HookConvention conv) {
    require_strict(lambda);
    Diagram d(lambda, true);
    const auto names = weight_variable_names(lambda);
    IdentityReport rep;
    rep.kind = "weighted";
    rep.lambda = lambda;
    rep.notes.push_back("convention " + to_string(conv));
    for (Cell z : d.cells()) {
        const BigInt m = weighted_punctured_hook(lambda, z, conv).poly.coefficient_sum();
        if (m != d.hook_length(z) - 1)
            rep.checks.push_back({"hook-size", z, m.str(), std::to_string(d.hook_length(z) - 1), false});
    }
    WeightedSides ws = weighted_sides(d, conv);
    VarsSides vs = vars_sides(d);
    for (int k = 0; k < 3; ++k) {
        const bool eq = ws.lhs[k] == ws.rhs[k];
        rep.checks.push_back({kIdentityNames[k], std::nullopt, eq ? std::to_string(ws.lhs[k].term_count()) + " terms"
                                                                  : ws.lhs[k].to_string(names),
                              eq ? std::to_string(ws.rhs[k].term_count()) + " terms" : ws.rhs[k].to_string(names), eq});
        const BigInt l1 = ws.lhs[k].coefficient_sum(), r1 = ws.rhs[k].coefficient_sum();
        rep.checks.push_back({std::string(kIdentityNames[k]) + "-at-1", std::nullopt, l1.str() + " / " + r1.str(),
                              vs.lhs[k].str() + " / " + vs.rhs[k].str(), l1 == vs.lhs[k] && r1 == vs.rhs[k]});
    }
    return rep;
}

namespace {

BigInt variant_h(const Diagram& d, int r, int s, int m, VariantForm form) {
    auto h = [&](int i, int j) { return BigInt(d.hook_length_or_one({i, j})); };
    const int R = r - 1;
    auto snake_sum = [&](int top, bool must_reach_top) {
        BigInt total = 0;
        for (std::uint32_t mask = 0; mask < (1U << top); ++mask) {
            if (!(mask & 1U)) continue;  // min I = 1
            if (must_reach_top && !(mask >> (top - 1) & 1U)) continue;
            for (int k = 1; k <= top; ++k) {
                if (!(mask >> (k - 1) & 1U)) continue;
                BigInt t = 1;
                for (int i = 1; i <= top; ++i) {
                    const bool in = mask >> (i - 1) & 1U;
                    if (!in || i > k) t *= h(i, R) - 1;
                    if (!in || i < k) t *= h(i, s) - 1;
                }
                total += t;
            }
        }
        return total;
    };
    if (r <= m) {
        BigInt p = 1;
        for (int i = 1; i <= r - 1; ++i) p *= h(i, R) - 1;
        for (int j = r; j <= m - 1; ++j) p *= h(r, j) - 1;
        for (int i = 2; i <= r - 1; ++i) p *= form == VariantForm::Corrected ? h(i, s) : h(i, s) - 1;
        return p;
    }
    if (r == m + 1) {
        BigInt p = 1;
        for (int i = 2; i <= r - 1; ++i) p *= h(i, R);
        for (int i = 1; i <= r - 1; ++i) p *= h(i, s) - 1;
        return snake_sum(m, false) + p;
    }
    BigInt t3 = h(m + 1, R) - 1, t4 = h(m + 1, s) - 1;
    for (int i = 2; i <= m; ++i) {
        t3 *= h(i, R);
        t4 *= h(i, s);
    }
    for (int i = 1; i <= m; ++i) {
        t3 *= h(i, s) - 1;
        t4 *= h(i, R) - 1;
    }
    return snake_sum(m, false) + snake_sum(m + 1, true) + t3 + t4;
}

void check_m(const Partition& lambda, int m) {
    require_strict(lambda);
    if (m < 1 || m > lambda.part(1)) throw std::invalid_argument("m must satisfy 1 <= m <= lambda_1");
}

}  // namespace

std::vector<VariantTerm> variant_m_terms(const Partition& lambda, int m, VariantForm form) {
    check_m(lambda, m);
    Diagram d(lambda, true);
    std::vector<VariantTerm> out;
    for (Cell c : d.corners()) {
        const int r = c.row, s = c.col;
        BigInt t = variant_h(d, r, s, m, form);
        t *= rest_product(d, c, BigInt(1), [&](Cell z) { return BigInt(d.hook_length(z) - 1); });
        for (int i = m + 2; i <= r - 1; ++i) t *= d.hook_length_or_one({i, s}) * d.hook_length_or_one({i, r - 1});
        for (int j = std::max(r, m + 1); j <= s - 1; ++j) t *= d.hook_length_or_one({r, j});
        out.push_back({c, t});
    }
    return out;
}

std::vector<VariantTerm> variant_m_oracle(const Partition& lambda, int m) {
    check_m(lambda, m);
    auto d = std::make_shared<const Diagram>(lambda, true);
    auto h = std::make_shared<const HookSystem>(HookSystem::from_diagram(*d));
    const int target = d->index({1, m});
    std::vector<VariantTerm> out;
    for (Cell c : d->corners()) {
        ShiftedMaps maps(d, h, c);
        const LabelDomains dom = maps.domains();
        if (space_size(dom) > max_enumeration()) throw std::invalid_argument("oracle space exceeds the enumeration bound");
        BigInt count = 0;
        LabelOdometer od(dom);
        while (od.next())
            if (maps.start(od.current()) == target) ++count;
        out.push_back({c, count});
    }
    return out;
}

IdentityReport verify_variant_m(const Partition& lambda, int m) {
    check_m(lambda, m);
    Diagram d(lambda, true);
    BigInt lhs = 1;
    for (Cell z : d.cells())
        if (!d.is_corner(z)) lhs *= d.hook_length(z) - 1;
    IdentityReport rep;
    rep.kind = "variant-m";
    rep.lambda = lambda;
    rep.details = {{"m", m}};
    for (VariantForm form : {VariantForm::Corrected, VariantForm::Uncorrected}) {
        BigInt rhs = 0;
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : variant_m_terms(lambda, m, form)) {
            rhs += t.value;
            terms.push_back({{"corner", to_json(t.corner)}, {"value", t.value.str()}});
        }
        IdentityCheck ck{"variant-m-" + to_string(form), std::nullopt, lhs.str(), rhs.str(), lhs == rhs};
        ck.informational = form == VariantForm::Uncorrected;
        rep.checks.push_back(ck);
        rep.details[to_string(form) + "_terms"] = terms;
    }
    return rep;
}

namespace {

Rational shifted_f(const Partition& lambda, std::optional<Cell> perturbed) {
    if (lambda.length() == 0) return 1;
    Diagram d(lambda, true);
    BigInt prod = 1;
    for (Cell z : d.cells()) prod *= d.hook_length(z) + (perturbed && *perturbed == z ? 1 : 0);
    return Rational(factorial(d.size()), prod);
}

}  // namespace

IdentityReport verify_recursion_corollary(const Partition& lambda, const CorollaryOptions& opt) {
    require_strict(lambda);
    Diagram d(lambda, true);
    const int n = d.size(), l1 = lambda.part(1);
    const Rational lhs = Rational(l1) * shifted_f(lambda, opt.perturbed_cell);
    IdentityReport rep;
    rep.kind = "recursion";
    rep.lambda = lambda;
    std::vector<std::string> balanced;
    for (CorollaryReading reading : {CorollaryReading::LambdaOne, CorollaryReading::Size}) {
        const int X = reading == CorollaryReading::LambdaOne ? l1 : n;
        Rational rhs = 0;
        nlohmann::json terms = nlohmann::json::array();
        for (Cell c : d.corners()) {
            const int r = c.row, s = c.col;
            const BigInt a = l1 + r - s, b = X - r + s + 1;
            Rational term = Rational(n) * (Rational(1, a) + Rational(1, b) - Rational(1, a * b)) *
                            shifted_f(lambda.remove_from_row(r), std::nullopt);
            rhs += term;
            terms.push_back({{"corner", to_json(c)}, {"term", to_string(term)}});
        }
        IdentityCheck ck{"recursion-" + to_string(reading), std::nullopt, to_string(lhs), to_string(rhs), lhs == rhs};
        ck.informational = reading != opt.reading;
        if (ck.pass) balanced.push_back(to_string(reading));
        rep.checks.push_back(ck);
        rep.details[to_string(reading) + "_terms"] = terms;
    }
    rep.details["reading"] = to_string(opt.reading);
    rep.details["balanced_readings"] = balanced;
    rep.notes.push_back("denominator symbol read as " + to_string(opt.reading));
    return rep;
}

nlohmann::json Adjudication::to_json() const {
    nlohmann::json f = nlohmann::json::object();
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto& v = failures[k];
        f[candidates[k]] = {{"failures", v.size()},
                            {"examples", std::vector<std::string>(v.begin(), v.begin() + std::min<std::size_t>(v.size(), 6))}};
    }
    return {{"question", question}, {"candidates", f}, {"passing", passing}};
}

namespace {

Adjudication adjudicate(std::string question, std::vector<std::string> candidates, int max_n,
                        const std::function<bool(const Partition&, std::size_t)>& ok) {
    Adjudication a{std::move(question), std::move(candidates), {}, {}};
    a.failures.resize(a.candidates.size());
    for (int n = 1; n <= max_n; ++n)
        for (const Partition& p : strict_partitions_of(n))
            for (std::size_t k = 0; k < a.candidates.size(); ++k)
                if (!ok(p, k)) a.failures[k].push_back(p.to_string());
    for (std::size_t k = 0; k < a.candidates.size(); ++k)
        if (a.failures[k].empty()) a.passing.push_back(a.candidates[k]);
    return a;
}

}  // namespace

Adjudication adjudicate_hook_convention(int max_n) {
    return adjudicate("weighted hook y-index window", {"a", "b"}, max_n, [](const Partition& p, std::size_t k) {
        return verify_weighted(p, k == 0 ? HookConvention::A : HookConvention::B).pass();
    });
}

Adjudication adjudicate_corollary_reading(int max_n) {
    return adjudicate("recursion denominator symbol", {"lambda_1", "n"}, max_n, [](const Partition& p, std::size_t k) {
        CorollaryOptions o;
        o.reading = k == 0 ? CorollaryReading::LambdaOne : CorollaryReading::Size;
        return verify_recursion_corollary(p, o).pass();
    });
}

}  // namespace hooklab
