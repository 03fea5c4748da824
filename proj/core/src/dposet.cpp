#include "hooklab/dposet.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "hooklab/tableaux.hpp"

namespace hooklab {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<int> members(std::uint64_t mask) {
    std::vector<int> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

DPoset::DPoset(std::vector<std::string> names, std::vector<std::pair<int, int>> covers,
               std::shared_ptr<const Construction> construction)
    : names_(std::move(names)), covers_(std::move(covers)), construction_(std::move(construction)) {
    const int n = size();
    if (n > 64) throw std::invalid_argument("posets are limited to 64 elements");
    up_cov_.assign(static_cast<std::size_t>(n), {});
    low_cov_.assign(static_cast<std::size_t>(n), {});
    for (auto [a, b] : covers_) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("bad cover relation");
        auto& ups = up_cov_[static_cast<std::size_t>(a)];
        if (std::find(ups.begin(), ups.end(), b) != ups.end()) throw std::invalid_argument("repeated cover relation");
        ups.push_back(b);
        low_cov_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& v : up_cov_) std::sort(v.begin(), v.end());
    for (auto& v : low_cov_) std::sort(v.begin(), v.end());

    // Kahn order from the bottom
    std::vector<int> indeg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) indeg[static_cast<std::size_t>(v)] = static_cast<int>(lower_covers(v).size());
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int b : upper_covers(order[i]))
            if (--indeg[static_cast<std::size_t>(b)] == 0) order.push_back(b);
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("cover relations contain a cycle");

    down_.assign(static_cast<std::size_t>(n), 0);
    up_.assign(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        std::uint64_t m = bit(v);
        for (int a : lower_covers(v)) m |= down_[static_cast<std::size_t>(a)];
        down_[static_cast<std::size_t>(v)] = m;
    }
    for (int v = 0; v < n; ++v)
        for (int w : members(down_[static_cast<std::size_t>(v)])) up_[static_cast<std::size_t>(w)] |= bit(v);

    for (auto [a, b] : covers_)
        for (int c : upper_covers(a))
            if (c != b && leq(c, b))
                throw std::invalid_argument("cover relations are not a transitive reduction (" + name(a) + " < " +
                                            name(b) + ")");
}

int DPoset::index(std::string_view nm) const {
    for (int v = 0; v < size(); ++v)
        if (names_[static_cast<std::size_t>(v)] == nm) return v;
    return -1;
}

bool DPoset::covers(int lower, int upper) const {
    const auto& ups = upper_covers(lower);
    return std::binary_search(ups.begin(), ups.end(), upper);
}

std::uint64_t DPoset::all() const { return size() == 64 ? ~std::uint64_t{0} : bit(size()) - 1; }

std::vector<int> DPoset::minimal() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (lower_covers(v).empty()) out.push_back(v);
    return out;
}

std::vector<int> DPoset::maximal() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (upper_covers(v).empty()) out.push_back(v);
    return out;
}

std::vector<std::uint64_t> DPoset::components() const {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    for (int v = 0; v < size(); ++v) {
        if (seen & bit(v)) continue;
        std::uint64_t comp = bit(v), frontier = bit(v);
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (int w : members(frontier)) {
                for (int a : upper_covers(w)) next |= bit(a);
                for (int a : lower_covers(w)) next |= bit(a);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

nlohmann::json DPoset::to_json() const {
    nlohmann::json cov = nlohmann::json::array();
    for (auto [a, b] : covers_) cov.push_back({name(a), name(b)});
    nlohmann::json mins = nlohmann::json::array(), maxs = nlohmann::json::array();
    for (int v : minimal()) mins.push_back(name(v));
    for (int v : maximal()) maxs.push_back(name(v));
    std::string kind = "custom";
    if (construction_) {
        switch (construction_->kind) {
            case Construction::Kind::Diagram: kind = construction_->shifted ? "shifted" : "diagram"; break;
            case Construction::Kind::Diamond: kind = "diamond"; break;
            case Construction::Kind::Union: kind = "union"; break;
            case Construction::Kind::Slant: kind = "slant"; break;
            case Construction::Kind::Custom: break;
        }
    }
    return {{"size", size()}, {"construction", kind}, {"elements", names_},
            {"covers", cov},  {"minimal", mins},      {"maximal", maxs}};
}

DPoset build_diamond(int k) {
    if (k < 3) throw std::invalid_argument("d_k(1) needs k >= 3");
    const int d = k - 1;
    // y_j -> j-1, x_j -> d+j-1
    auto y = [](int j) { return j - 1; };
    auto x = [d](int j) { return d + j - 1; };
    std::vector<std::string> names;
    for (int j = 1; j <= d; ++j) names.push_back("y" + std::to_string(j));
    for (int j = 1; j <= d; ++j) names.push_back("x" + std::to_string(j));
    std::vector<std::pair<int, int>> cov;
    for (int j = 1; j + 1 <= d - 1; ++j) cov.emplace_back(y(j), y(j + 1));
    cov.emplace_back(y(d - 1), x(d));
    cov.emplace_back(y(d - 1), y(d));
    cov.emplace_back(x(d), x(d - 1));
    cov.emplace_back(y(d), x(d - 1));
    for (int j = d - 1; j >= 2; --j) cov.emplace_back(x(j), x(j - 1));
    auto c = std::make_shared<Construction>();
    c->kind = Construction::Kind::Diamond;
    c->k = k;
    return DPoset(std::move(names), std::move(cov), std::move(c));
}

DPoset build_diagram(const Partition& lambda, bool shifted) {
    if (lambda.size() == 0) throw std::invalid_argument("empty diagram");
    Diagram dg(lambda, shifted);
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> cov;
    for (int v = 0; v < dg.size(); ++v) {
        Cell z = dg.cell(v);
        names.push_back(to_string(z));
        if (int u = dg.index({z.row - 1, z.col}); u >= 0) cov.emplace_back(v, u);
        if (int u = dg.index({z.row, z.col - 1}); u >= 0) cov.emplace_back(v, u);
    }
    auto c = std::make_shared<Construction>();
    c->kind = Construction::Kind::Diagram;
    c->lambda = lambda;
    c->shifted = shifted;
    return DPoset(std::move(names), std::move(cov), std::move(c));
}

DPoset build_chain(int k) {
    if (k < 1) throw std::invalid_argument("chain length must be positive");
    return build_diagram(Partition({k}), false);
}

namespace {

DPoset combine(const DPoset& a, const DPoset& b, int u) {
    const int na = a.size();
    if (na + b.size() > 64) throw std::invalid_argument("posets are limited to 64 elements");
    std::vector<std::string> names;
    for (int v = 0; v < na; ++v) names.push_back("1." + a.name(v));
    for (int v = 0; v < b.size(); ++v) names.push_back("2." + b.name(v));
    std::vector<std::pair<int, int>> cov = a.covers();
    for (auto [p, q] : b.covers()) cov.emplace_back(p + na, q + na);
    auto c = std::make_shared<Construction>();
    c->left = std::make_shared<DPoset>(a);
    c->right = std::make_shared<DPoset>(b);
    if (u < 0) {
        c->kind = Construction::Kind::Union;
    } else {
        auto top = b.maximal();
        if (top.size() != 1) throw std::invalid_argument("slant sum needs a unique maximal element in the lower poset");
        if (u >= na) throw std::invalid_argument("slant sum attachment element out of range");
        cov.emplace_back(top.front() + na, u);
        c->kind = Construction::Kind::Slant;
        c->u = u;
    }
    return DPoset(std::move(names), std::move(cov), std::move(c));
}

}  // namespace

DPoset disjoint_union(const DPoset& a, const DPoset& b) { return combine(a, b, -1); }

DPoset slant_sum(const DPoset& a, int u, const DPoset& b) { return combine(a, b, u); }

namespace {

class PosetParser {
public:
    explicit PosetParser(std::string_view s) : s_(s) {}

    DPoset parse() {
        DPoset p = term();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("poset expression: " + what + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char ch) {
        if (!eat(ch)) fail(std::string("expected '") + ch + "'");
    }
    std::string word() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(b, pos_ - b));
    }
    bool digit_at(std::size_t i) const {
        return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]));
    }
    int integer() {
        skip();
        if (!digit_at(pos_)) fail("expected a number");
        int v = 0;
        while (digit_at(pos_)) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000) fail("number too large");
        }
        return v;
    }
    // Digits and commas; a comma is part of the partition only when a digit follows.
    Partition partition() {
        skip();
        std::size_t b = pos_;
        if (!digit_at(pos_)) fail("expected a partition");
        while (digit_at(pos_) || (s_[pos_] == ',' && digit_at(pos_ + 1))) ++pos_;
        return parse_partition(s_.substr(b, pos_ - b));
    }
    std::string element_name() {
        skip();
        std::size_t b = pos_;
        if (pos_ < s_.size() && s_[pos_] == '(') {
            // "(i,j)", possibly behind prefixes like "1."
            pos_ = s_.find(')', pos_);
            if (pos_ == std::string_view::npos) fail("unterminated element name");
            ++pos_;
            return std::string(s_.substr(b, pos_ - b));
        }
        while (pos_ < s_.size()) {
            char ch = s_[pos_];
            if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '_') {
                ++pos_;
            } else if (ch == '(') {
                pos_ = s_.find(')', pos_);
                if (pos_ == std::string_view::npos) fail("unterminated element name");
                ++pos_;
                break;
            } else {
                break;
            }
        }
        if (pos_ == b) fail("expected an element name");
        return std::string(s_.substr(b, pos_ - b));
    }

    DPoset term() {
        std::string w = word();
        if (w == "diamond") {
            expect(':');
            return build_diamond(integer());
        }
        if (w == "chain") {
            expect(':');
            return build_chain(integer());
        }
        if (w == "diagram" || w == "shifted") {
            expect(':');
            Partition p = partition();
            if (w == "shifted" && !p.is_strict()) fail("shifted diagrams need a strict partition");
            return build_diagram(p, w == "shifted");
        }
        if (w == "union") {
            expect('(');
            DPoset a = term();
            expect(',');
            DPoset b = term();
            expect(')');
            return disjoint_union(a, b);
        }
        if (w == "slant") {
            expect('(');
            DPoset a = term();
            expect('@');
            std::string u = element_name();
            int ui = a.index(u);
            if (ui < 0) fail("unknown element '" + u + "'");
            expect(',');
            DPoset b = term();
            expect(')');
            return slant_sum(a, ui, b);
        }
        fail(w.empty() ? "expected a poset" : "unknown poset kind '" + w + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

DPoset parse_poset(std::string_view text) { return PosetParser(text).parse(); }

namespace {

// Shape of an interval: its single incomparable pair, and how many elements
// sit below and above that pair. nullopt unless exactly one pair is incomparable.
struct IntervalShape {
    int x, y, below, above, size;
};

std::optional<IntervalShape> interval_shape(const DPoset& p, int w, int z) {
    if (w == z || !p.leq(w, z)) return std::nullopt;
    const std::uint64_t I = p.up(w) & p.down(z);
    int x = -1, y = -1;
    for (int v : members(I)) {
        std::uint64_t inc = I & ~(p.up(v) | p.down(v));
        if (inc == 0) continue;
        if (std::popcount(inc) != 1) return std::nullopt;
        int o = std::countr_zero(inc);
        if (x < 0) {
            x = v;
            y = o;
        } else if (!((x == o && y == v) || (x == v && y == o))) {
            return std::nullopt;
        }
    }
    if (x < 0) return std::nullopt;
    const std::uint64_t rest = I & ~(bit(x) | bit(y));
    const int below = std::popcount(rest & p.down(x));
    return IntervalShape{x, y, below, std::popcount(rest) - below, std::popcount(I)};
}

}  // namespace

std::optional<DInterval> dk_interval(const DPoset& p, int w, int z) {
    auto sh = interval_shape(p, w, z);
    if (!sh || sh->below != sh->above || sh->below < 1) return std::nullopt;
    return DInterval{w, z, sh->below + 2, sh->x, sh->y};
}

std::optional<DInterval> dk_minus_interval(const DPoset& p, int w, int y) {
    auto sh = interval_shape(p, w, y);
    if (!sh || sh->above < 1 || sh->below != sh->above + 1) return std::nullopt;
    return DInterval{w, y, sh->below + 2, sh->x, sh->y};
}

bool DCompleteReport::pass() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.pass; });
}

nlohmann::json DCompleteReport::to_json() const {
    nlohmann::json ax = nlohmann::json::array();
    for (const auto& a : axioms) ax.push_back({{"axiom", a.axiom}, {"pass", a.pass}, {"witnesses", a.witnesses}});
    return {{"pass", pass()}, {"axioms", ax}};
}

DCompleteReport verify_dcomplete(const DPoset& p) {
    const int n = p.size();
    AxiomResult d1{"D1", true, {}}, d2{"D2", true, {}}, d3{"D3", true, {}}, d4{"D4", true, {}}, d5{"D5", true, {}},
        d6{"D6", true, {}}, d7{"D7", true, {}};
    auto note = [](AxiomResult& a, std::string w) {
        a.pass = false;
        if (a.witnesses.size() < 8) a.witnesses.push_back(std::move(w));
    };

    for (int w = 0; w < n; ++w) {
        const auto& ups = p.upper_covers(w);
        for (std::size_t i = 0; i < ups.size(); ++i)
            for (std::size_t j = i + 1; j < ups.size(); ++j) {
                int x = ups[i], y = ups[j];
                std::vector<int> tops;
                for (int z : p.upper_covers(x))
                    if (p.covers(y, z)) tops.push_back(z);
                if (tops.empty())
                    note(d1, p.name(x) + " and " + p.name(y) + " cover " + p.name(w) + " but share no upper cover");
                for (int z : tops)
                    if (p.lower_covers(z).size() != 2)
                        note(d2, p.name(z) + " tops the diamond on " + p.name(w) + " and covers " +
                                     std::to_string(p.lower_covers(z).size()) + " elements");
            }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            std::vector<int> common;
            for (int a : p.lower_covers(x))
                if (p.covers(a, y)) common.push_back(a);
            if (common.size() > 1)
                note(d3, p.name(x) + " and " + p.name(y) + " both cover " + p.name(common[0]) + " and " +
                             p.name(common[1]));
        }
    for (int w = 0; w < n; ++w)
        for (int z = 0; z < n; ++z) {
            if (auto I = dk_interval(p, w, z); I && I->k >= 4 && p.lower_covers(z).size() != 1)
                note(d5, "top " + p.name(z) + " of the d_" + std::to_string(I->k) + "-interval from " + p.name(w) +
                             " covers more than one element");
            auto J = dk_minus_interval(p, w, z);
            if (!J) continue;
            bool completes = false;
            for (int t : p.upper_covers(z))
                if (auto K = dk_interval(p, w, t); K && K->k == J->k) completes = true;
            if (!completes)
                note(d4, "d_" + std::to_string(J->k) + "^- interval [" + p.name(w) + "," + p.name(z) +
                             "] has no completing top");
            const std::uint64_t I = p.up(w) & p.down(z);
            int inside = 0;
            for (int v : p.upper_covers(w))
                if (I & bit(v)) ++inside;
            if (inside != 1 || p.upper_covers(w).size() != 1)
                note(d6, p.name(w) + " has upper covers outside the d_" + std::to_string(J->k) +
                             "^- interval [" + p.name(w) + "," + p.name(z) + "]");
        }
    // D7: no two d_k^- intervals (k >= 4) differ only in their bottom element
    for (int y = 0; y < n; ++y) {
        std::vector<std::pair<int, std::uint64_t>> tops;  // bottom, interval without it
        for (int w : members(p.down(y)))
            if (dk_minus_interval(p, w, y)) tops.emplace_back(w, p.up(w) & p.down(y) & ~bit(w));
        for (std::size_t i = 0; i < tops.size(); ++i)
            for (std::size_t j = i + 1; j < tops.size(); ++j)
                if (tops[i].second == tops[j].second)
                    note(d7, "d^- intervals [" + p.name(tops[i].first) + "," + p.name(y) + "] and [" +
                                 p.name(tops[j].first) + "," + p.name(y) + "] differ only in their bottom");
    }
    return {{d1, d2, d3, d4, d5, d6, d7}};
}

namespace {

// For each element, the d_k-intervals having it as top.
using IntervalTable = std::vector<std::vector<DInterval>>;

IntervalTable interval_table(const DPoset& p) {
    IntervalTable t(static_cast<std::size_t>(p.size()));
    for (int z = 0; z < p.size(); ++z)
        for (int w : members(p.down(z)))
            if (auto I = dk_interval(p, w, z)) t[static_cast<std::size_t>(z)].push_back(*I);
    return t;
}

std::vector<int> hooks_on(const DPoset& p, const IntervalTable& t, std::uint64_t mask) {
    std::vector<int> order = members(mask);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(p.down(a) & mask) < std::popcount(p.down(b) & mask);
    });
    std::vector<int> h(static_cast<std::size_t>(p.size()), 0);
    for (int z : order) {
        const DInterval* top = nullptr;
        for (const auto& I : t[static_cast<std::size_t>(z)])
            if (mask & bit(I.bottom)) {
                top = &I;
                break;
            }
        auto at = [&](int v) { return h[static_cast<std::size_t>(v)]; };
        h[static_cast<std::size_t>(z)] =
            top ? at(top->x) + at(top->y) - at(top->bottom) : std::popcount(p.down(z) & mask);
    }
    return h;
}

}  // namespace

std::vector<int> hook_lengths_on(const DPoset& p, std::uint64_t mask) {
    return hooks_on(p, interval_table(p), mask);
}

std::vector<DHookData> hook_lengths_dcomplete(const DPoset& p) {
    if (auto rep = verify_dcomplete(p); !rep.pass()) {
        std::string which;
        for (const auto& a : rep.axioms)
            if (!a.pass) which += (which.empty() ? "" : ",") + a.axiom;
        throw std::invalid_argument("poset is not d-complete (fails " + which + ")");
    }
    const IntervalTable t = interval_table(p);
    const std::vector<int> h = hooks_on(p, t, p.all());
    std::vector<DHookData> out(static_cast<std::size_t>(p.size()));
    for (std::uint64_t comp : p.components()) {
        int top = -1;
        for (int v : members(comp))
            if (p.upper_covers(v).empty()) {
                if (top >= 0) throw std::invalid_argument("a connected component has several maximal elements");
                top = v;
            }
        std::vector<std::vector<int>> closed, open;
        for (int w : members(comp)) {
            closed.push_back(hooks_on(p, t, p.up(w)));
            open.push_back(hooks_on(p, t, p.up(w) & ~bit(w)));
        }
        const std::vector<int> ids = members(comp);
        for (std::size_t zi = 0; zi < ids.size(); ++zi) {
            const int z = ids[zi];
            DHookData& d = out[static_cast<std::size_t>(z)];
            d.element = z;
            d.hook_length = h[static_cast<std::size_t>(z)];
            d.hook_set.push_back(z);
            for (std::size_t wi = 0; wi < ids.size(); ++wi) {
                const int w = ids[wi];
                if (w == z || !p.leq(w, z)) continue;
                const auto zs = static_cast<std::size_t>(z);
                if (open[wi][zs] == closed[wi][zs] - 1) d.hook_set.push_back(w);
            }
        }
    }
    return out;
}

HookSystem hook_system(const DPoset& p) {
    const int n = p.size();
    auto data = hook_lengths_dcomplete(p);
    std::vector<std::vector<int>> hooks;
    for (auto& d : data) hooks.push_back(std::move(d.hook_set));
    std::vector<std::uint8_t> minimal(static_cast<std::size_t>(n), 0);
    for (int v : p.minimal()) minimal[static_cast<std::size_t>(v)] = 1;
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) leq[static_cast<std::size_t>(a * n + b)] = p.leq(a, b) ? 1 : 0;
    return HookSystem(std::move(hooks), std::move(minimal), std::move(leq));
}

nlohmann::json DBranchingReport::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [c, v] : summands) terms.push_back({{"corner", c}, {"term", v.str()}});
    return {{"lhs", lhs.str()}, {"rhs", rhs.str()}, {"summands", terms}, {"pass", equal}};
}

DBranchingReport check_branching_dcomplete(const DPoset& p) {
    auto data = hook_lengths_dcomplete(p);
    const int n = p.size();
    std::vector<std::uint8_t> is_min(static_cast<std::size_t>(n), 0);
    for (int v : p.minimal()) is_min[static_cast<std::size_t>(v)] = 1;
    DBranchingReport r;
    r.lhs = n;
    for (const auto& d : data)
        if (!is_min[static_cast<std::size_t>(d.element)]) r.lhs *= d.hook_length - 1;
    r.rhs = 0;
    for (int c : p.minimal()) {
        BigInt term = 1;
        for (const auto& d : data) {
            if (is_min[static_cast<std::size_t>(d.element)]) continue;
            bool in = std::find(d.hook_set.begin(), d.hook_set.end(), c) != d.hook_set.end();
            term *= in ? d.hook_length : d.hook_length - 1;
        }
        r.summands.emplace_back(p.name(c), term);
        r.rhs += term;
    }
    r.equal = r.lhs == r.rhs;
    return r;
}

BigInt count_linear_extensions(const DPoset& p) {
    // larger elements receive smaller labels, so they come first
    std::vector<std::vector<int>> pre(static_cast<std::size_t>(p.size()));
    for (int v = 0; v < p.size(); ++v) pre[static_cast<std::size_t>(v)] = p.upper_covers(v);
    return count_linear_extensions(pre);
}

BigInt hook_formula_count(const DPoset& p) {
    BigInt prod = 1;
    for (const auto& d : hook_lengths_dcomplete(p)) prod *= d.hook_length;
    BigInt nf = factorial(p.size());
    if (nf % prod != 0) throw std::logic_error("hook product does not divide n!");
    return nf / prod;
}

}  // namespace hooklab
