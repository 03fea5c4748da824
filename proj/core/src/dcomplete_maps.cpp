#include "hooklab/dcomplete_maps.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "hooklab/bijection_plain.hpp"
#include "hooklab/bijection_shifted.hpp"
#include "hooklab/config.hpp"

namespace hooklab {

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> dots_of(const Labels& g) {
    std::vector<int> out;
    for (int z = 0; z < static_cast<int>(g.size()); ++z)
        if (g[static_cast<std::size_t>(z)] == z) out.push_back(z);
    return out;
}

// Keeps the candidates that really are preimages of (gp, z).
std::vector<Labels> confirm(const CornerMaps& m, const std::vector<Labels>& cands, const Labels& gp, int z) {
    const LabelDomains dom = m.domains();
    std::set<Labels> seen;
    std::vector<Labels> out;
    for (const Labels& g : cands) {
        if (!seen.insert(g).second) continue;
        if (!labels_valid(dom, g) || dot_count(g) != dot_count(gp) + 1) continue;
        try {
            if (m.start(g) == z && m.erase(g) == gp) out.push_back(g);
        } catch (const UnsupportedConstruction&) {
        }
    }
    return out;
}

class DiamondMaps : public CornerMaps {
public:
    DiamondMaps(std::shared_ptr<const HookSystem> h, int k) : h_(std::move(h)), d_(k - 1) {}

    const HookSystem& system() const override { return *h_; }
    int corner() const override { return y(1); }

    int start(const Labels& g) const override {
        auto [lo_x, hi_y] = levels(g);
        if (lo_x == 0 && hi_y == 0) return y(1);
        if (lo_x == hi_y) return x(1);
        const std::vector<int> dots = dots_of(g);
        for (int m : dots)
            if (std::all_of(dots.begin(), dots.end(), [&](int z) { return h_->leq(z, m); })) return m;
        throw std::logic_error("diamond: dots without a largest element");
    }

    Labels erase(const Labels& g) const override {
        auto [lo_x, hi_y] = levels(g);
        if (lo_x == 0 && hi_y == 0) return g;
        Labels out = g;
        if (lo_x != hi_y) {
            const int m = start(g);
            out[static_cast<std::size_t>(m)] = h_->hook(m).at(1);  // any non-dot placeholder
            out[static_cast<std::size_t>(m)] = start(out);
            return out;
        }
        const int j = lo_x;
        const int label = g[static_cast<std::size_t>(x(1))];
        // identify the punctured hook of x_1 with those of x_j and y_j
        bool y_part = false;
        int cell = label;
        for (int t = 2; t <= j; ++t) {
            if (label == x(t)) {
                y_part = true;
                cell = y(t - 1);
            } else if (label == y(t)) {
                cell = y(t - 1);
            }
        }
        const int erased = y_part ? y(j) : x(j);
        out[static_cast<std::size_t>(erased)] = cell;
        out[static_cast<std::size_t>(x(1))] = start(out);
        return out;
    }

private:
    int y(int j) const { return j - 1; }
    int x(int j) const { return d_ + j - 1; }
    // Levels of the lowest x-dot and the highest y-dot, as (max{i : x_i dotted},
    // max{i : y_i dotted}); 0 when absent.
    std::pair<int, int> levels(const Labels& g) const {
        int lo_x = 0, hi_y = 0;
        for (int i = 1; i <= d_; ++i)
            if (g[static_cast<std::size_t>(x(i))] == x(i)) lo_x = i;
        for (int i = 1; i <= d_; ++i)
            if (g[static_cast<std::size_t>(y(i))] == y(i)) hi_y = i;
        return {lo_x, hi_y};
    }

    std::shared_ptr<const HookSystem> h_;
    int d_;
};

// Component maps of a disjoint union, or of the lower part of a slant sum
// while every dot stays there: ids of the child shifted by `off`.
Labels restrict_labels(const Labels& g, int off, int n) {
    Labels out(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        int l = g[static_cast<std::size_t>(e + off)];
        out[static_cast<std::size_t>(e)] = l < 0 ? kNoLabel : l - off;
    }
    return out;
}

void write_back(Labels& g, const Labels& child, int off) {
    for (std::size_t e = 0; e < child.size(); ++e)
        g[e + static_cast<std::size_t>(off)] = child[e] < 0 ? kNoLabel : child[e] + off;
}

class UnionMaps : public CornerMaps {
public:
    UnionMaps(std::shared_ptr<const HookSystem> h, std::shared_ptr<const CornerMaps> child, int off)
        : h_(std::move(h)), child_(std::move(child)), off_(off), n_(child_->system().size()) {}

    const HookSystem& system() const override { return *h_; }
    int corner() const override { return child_->corner() + off_; }
    int start(const Labels& g) const override { return child_->start(restrict_labels(g, off_, n_)) + off_; }
    Labels erase(const Labels& g) const override {
        Labels out = g;
        write_back(out, child_->erase(restrict_labels(g, off_, n_)), off_);
        return out;
    }
    std::vector<Labels> preimages(const Labels& gp, int z) const override {
        if (z < off_ || z >= off_ + n_) return {};
        std::vector<Labels> out;
        for (const Labels& c : child_->preimages(restrict_labels(gp, off_, n_), z - off_)) {
            Labels g = gp;
            write_back(g, c, off_);
            out.push_back(std::move(g));
        }
        return out;
    }

private:
    std::shared_ptr<const HookSystem> h_;
    std::shared_ptr<const CornerMaps> child_;
    int off_;
    int n_;
};

// Slant sum with c in the lower part: dots inside the lower part defer to its
// maps; otherwise s is the largest dot and e relabels it.
class SlantLowerMaps : public CornerMaps {
public:
    SlantLowerMaps(std::shared_ptr<const HookSystem> h, std::shared_ptr<const CornerMaps> child, int off)
        : h_(std::move(h)), child_(std::move(child)), off_(off), n_(child_->system().size()) {}

    const HookSystem& system() const override { return *h_; }
    int corner() const override { return child_->corner() + off_; }

    int start(const Labels& g) const override {
        const std::vector<int> dots = dots_of(g);
        if (std::all_of(dots.begin(), dots.end(), [&](int z) { return z >= off_; }))
            return child_->start(restrict_labels(g, off_, n_)) + off_;
        for (int m : dots)
            if (std::all_of(dots.begin(), dots.end(), [&](int z) { return h_->leq(z, m); })) return m;
        throw UnsupportedConstruction("slant sum: the dots have no largest element");
    }

    Labels erase(const Labels& g) const override {
        const std::vector<int> dots = dots_of(g);
        if (std::all_of(dots.begin(), dots.end(), [&](int z) { return z >= off_; })) {
            Labels out = g;
            write_back(out, child_->erase(restrict_labels(g, off_, n_)), off_);
            return out;
        }
        const int m = start(g);
        Labels out = g;
        out[static_cast<std::size_t>(m)] = placeholder(m);
        out[static_cast<std::size_t>(m)] = start(out);
        return out;
    }

    std::vector<Labels> preimages(const Labels& gp, int z) const override {
        std::vector<Labels> cands = CornerMaps::preimages(gp, z);
        if (z >= off_)
            for (const Labels& c : child_->preimages(restrict_labels(gp, off_, n_), z - off_)) {
                Labels g = gp;
                write_back(g, c, off_);
                cands.push_back(std::move(g));
            }
        return confirm(*this, cands, gp, z);
    }

private:
    int placeholder(int m) const {
        for (int w : h_->hook(m))
            if (w != m) return w;
        throw UnsupportedConstruction("slant sum: empty punctured hook");
    }

    std::shared_ptr<const HookSystem> h_;
    std::shared_ptr<const CornerMaps> child_;
    int off_;
    int n_;
};

// Slant sum with c in the upper part (ids 0..n1-1), attached at u which is
// minimal there. Labels pointing into the lower part are shown to the upper
// maps as u and carried along when e moves them.
class SlantUpperMaps : public CornerMaps {
public:
    SlantUpperMaps(std::shared_ptr<const HookSystem> h, std::shared_ptr<const CornerMaps> child, int u)
        : h_(std::move(h)), child_(std::move(child)), u_(u), n1_(child_->system().size()) {}

    const HookSystem& system() const override { return *h_; }
    int corner() const override { return child_->corner(); }
    int start(const Labels& g) const override { return child_->start(upper(g)); }

    Labels erase(const Labels& g) const override {
        const Labels g1 = upper(g);
        const Labels e1 = child_->erase(g1);
        return lift(g, g1, e1);
    }

    std::vector<Labels> preimages(const Labels& gp, int z) const override {
        std::vector<Labels> cands = CornerMaps::preimages(gp, z);
        if (z < n1_) {
            const Labels gp1 = upper(gp);
            for (const Labels& c1 : child_->preimages(gp1, z)) {
                try {
                    cands.push_back(lift(gp, gp1, c1));
                } catch (const UnsupportedConstruction&) {
                }
            }
        }
        return confirm(*this, cands, gp, z);
    }

private:
    Labels upper(const Labels& g) const {
        Labels out(static_cast<std::size_t>(n1_), kNoLabel);
        const HookSystem& hs = child_->system();
        for (int z = 0; z < n1_; ++z) {
            if (hs.is_minimal(z)) continue;
            int l = g[static_cast<std::size_t>(z)];
            out[static_cast<std::size_t>(z)] = l >= n1_ ? u_ : l;
        }
        return out;
    }

    // Applies the change g1 -> e1 of the upper labels to g, moving a hidden
    // lower label along with the u that stood for it.
    Labels lift(const Labels& g, const Labels& g1, const Labels& e1) const {
        Labels out = g;
        std::vector<int> lost;
        std::vector<int> gained;
        for (int z = 0; z < n1_; ++z) {
            const auto zs = static_cast<std::size_t>(z);
            if (e1[zs] == g1[zs]) continue;
            if (g[zs] >= n1_) lost.push_back(g[zs]);
            out[zs] = e1[zs];
            if (e1[zs] == u_) gained.push_back(z);
        }
        if (lost.empty()) return out;
        if (lost.size() == 1 && gained.size() == 1) {
            out[static_cast<std::size_t>(gained.front())] = lost.front();
            return out;
        }
        throw UnsupportedConstruction("slant sum: a label into the lower part cannot be carried along");
    }

    std::shared_ptr<const HookSystem> h_;
    std::shared_ptr<const CornerMaps> child_;
    int u_;
    int n1_;
};

// Slant sum with c in the upper part attached at a non-minimal u: s is the
// upper start map on the dot set, and e pairs, in lexicographic order, the
// arrangements of each class (dots, s = z, labels off the down-set of z) with
// the targets of that class (one dot fewer, G_z = s(G), same labels).
class MatchedMaps : public CornerMaps {
public:
    MatchedMaps(std::shared_ptr<const HookSystem> h, std::shared_ptr<const CornerMaps> upper)
        : h_(std::move(h)), upper_(std::move(upper)), n1_(upper_->system().size()), dom_(g_domains(*h_, corner())) {}

    const HookSystem& system() const override { return *h_; }
    int corner() const override { return upper_->corner(); }

    int start(const Labels& g) const override {
        const HookSystem& hu = upper_->system();
        Labels g1(static_cast<std::size_t>(n1_), kNoLabel);
        for (int z = 0; z < n1_; ++z) {
            if (hu.is_minimal(z)) continue;
            const auto zs = static_cast<std::size_t>(z);
            if (g[zs] == z) {
                g1[zs] = z;
            } else {
                for (int w : hu.hook(z))
                    if (w != z) {
                        g1[zs] = w;
                        break;
                    }
            }
        }
        return upper_->start(g1);
    }

    Labels erase(const Labels& g) const override {
        const int k = dot_count(g);
        if (k == 0) return g;
        const int z = start(g);
        const Class& cl = lookup(g, z, k);
        auto it = std::lower_bound(cl.from.begin(), cl.from.end(), g);
        if (it == cl.from.end() || *it != g) throw std::logic_error("matched maps: arrangement missing from its class");
        return cl.to[static_cast<std::size_t>(it - cl.from.begin())];
    }

    std::vector<Labels> preimages(const Labels& gp, int z) const override {
        if (z < 0 || z >= h_->size() || h_->is_minimal(z)) return {};
        const Class& cl = lookup(gp, z, dot_count(gp) + 1);
        auto it = std::lower_bound(cl.to.begin(), cl.to.end(), gp);
        if (it == cl.to.end() || *it != gp) return {};
        return {cl.from[static_cast<std::size_t>(it - cl.to.begin())]};
    }

private:
    struct Class {
        std::vector<Labels> from, to;
    };

    const Class& lookup(const Labels& g, int z, int k) const {
        std::string key(1, static_cast<char>(k));
        key.push_back(static_cast<char>(z));
        for (int w = 0; w < h_->size(); ++w)
            key.push_back(h_->leq(w, z) ? 0 : static_cast<char>(g[static_cast<std::size_t>(w)] + 2));
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        LabelDomains sub = dom_;
        for (int w = 0; w < h_->size(); ++w)
            if (!h_->leq(w, z) && !sub[static_cast<std::size_t>(w)].empty())
                sub[static_cast<std::size_t>(w)] = {g[static_cast<std::size_t>(w)]};
        Class cl;
        LabelOdometer od(sub);
        while (od.next()) {
            const Labels& x = od.current();
            const int d = dot_count(x);
            if (d == k && start(x) == z) {
                cl.from.push_back(x);
            } else if (d == k - 1) {
                const int st = start(x);
                if (st != z && x[static_cast<std::size_t>(z)] == st) cl.to.push_back(x);
            }
        }
        if (cl.from.size() != cl.to.size())
            throw std::logic_error("matched maps: unbalanced class at " + std::to_string(z));
        std::sort(cl.from.begin(), cl.from.end());
        std::sort(cl.to.begin(), cl.to.end());
        return cache_.emplace(std::move(key), std::move(cl)).first->second;
    }

    std::shared_ptr<const HookSystem> h_;
    std::shared_ptr<const CornerMaps> upper_;
    int n1_;
    LabelDomains dom_;
    mutable std::unordered_map<std::string, Class> cache_;
};

std::vector<int> shifted_hook(const HookSystem& h, int z, int off) {
    std::vector<int> out;
    for (int w : h.hook(z)) out.push_back(w + off);
    return out;
}

std::shared_ptr<const CornerMaps> build_maps(const DPoset& p, int c) {
    const Construction* con = p.construction();
    if (!con || con->kind == Construction::Kind::Custom)
        throw UnsupportedConstruction("no construction tree for this poset");
    if (c < 0 || c >= p.size() || !p.lower_covers(c).empty())
        throw std::invalid_argument("c must be a minimal element");
    auto h = std::make_shared<const HookSystem>(hook_system(p));

    switch (con->kind) {
        case Construction::Kind::Diagram: {
            auto d = std::make_shared<const Diagram>(con->lambda, con->shifted);
            for (int z = 0; z < d->size(); ++z)
                if (sorted(d->hook(z)) != sorted(h->hook(z)))
                    throw UnsupportedConstruction("diagram hooks differ from the poset hook sets at " + p.name(z));
            if (con->shifted) return std::make_shared<ShiftedMaps>(d, h, d->cell(c));
            return std::make_shared<PlainMaps>(d, h, d->cell(c));
        }
        case Construction::Kind::Diamond:
            return std::make_shared<DiamondMaps>(h, con->k);
        case Construction::Kind::Union:
        case Construction::Kind::Slant: {
            const DPoset& a = *con->left;
            const DPoset& b = *con->right;
            const int na = a.size();
            const HookSystem ha = hook_system(a);
            const HookSystem hb = hook_system(b);
            // hook sets must split along the two parts
            const bool slant = con->kind == Construction::Kind::Slant;
            for (int z = 0; z < p.size(); ++z) {
                std::vector<int> expect;
                if (z >= na) {
                    expect = shifted_hook(hb, z - na, na);
                } else {
                    expect = ha.hook(z);
                    if (slant && ha.in_hook(z, con->u))
                        for (int w = 0; w < b.size(); ++w) expect.push_back(w + na);
                }
                if (sorted(expect) != sorted(h->hook(z)))
                    throw UnsupportedConstruction("hook sets of the combined poset do not split at " + p.name(z));
            }
            if (c >= na) {
                auto child = build_maps(b, c - na);
                if (con->kind == Construction::Kind::Union) return std::make_shared<UnionMaps>(h, child, na);
                return std::make_shared<SlantLowerMaps>(h, child, na);
            }
            auto child = build_maps(a, c);
            if (con->kind == Construction::Kind::Union) return std::make_shared<UnionMaps>(h, child, 0);
            if (a.lower_covers(con->u).empty()) return std::make_shared<SlantUpperMaps>(h, child, con->u);
            return std::make_shared<MatchedMaps>(h, child);
        }
        case Construction::Kind::Custom:
            break;
    }
    throw UnsupportedConstruction("unsupported construction");
}

}  // namespace

std::shared_ptr<const CornerMaps> se_maps(const DPoset& p, int c) { return build_maps(p, c); }

nlohmann::json ConjectureReport::to_json() const {
    nlohmann::json j = {{"corner", corner},        {"supported", supported}, {"exhaustive", exhaustive},
                        {"space", space.str()},    {"pass", pass()}};
    if (!supported) j["reason"] = unsupported_reason;
    else j["properties"] = properties.to_json();
    return j;
}

ConjectureReport verify_conjecture(const DPoset& p, int c, const ConjectureOptions& options) {
    ConjectureReport r;
    r.corner = p.name(c);
    std::shared_ptr<const CornerMaps> m;
    try {
        m = se_maps(p, c);
    } catch (const UnsupportedConstruction& ex) {
        r.supported = false;
        r.unsupported_reason = ex.what();
        return r;
    }
    r.space = space_size(m->domains());
    if (r.space <= max_enumeration()) {
        r.exhaustive = true;
        r.properties = verify_properties_exhaustive(*m, r.space <= options.inverse_check_limit);
    } else {
        std::mt19937_64 rng(options.seed == 0 ? kDefaultSeed : options.seed);
        r.properties = verify_properties_sampled(*m, options.samples, rng);
    }
    return r;
}

std::vector<ConjectureReport> verify_conjecture_all(const DPoset& p, const ConjectureOptions& options) {
    std::vector<ConjectureReport> out;
    for (int c : p.minimal()) out.push_back(verify_conjecture(p, c, options));
    return out;
}

nlohmann::json StartSearchResult::to_json() const {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [dots, s] : start) table.push_back({{"dots", dots}, {"s", s}});
    return {{"found", found}, {"exhausted", exhausted}, {"examined", examined}, {"start", table}};
}

namespace {

class StartSearch {
public:
    StartSearch(const DPoset& p, int c, std::uint64_t cap) : p_(p), h_(hook_system(p)), c_(c), cap_(cap) {
        const LabelDomains dom = g_domains(h_, c);
        for (int z = 0; z < p.size(); ++z)
            if (!h_.is_minimal(z) && h_.in_hook(z, c)) ac_.push_back(z);
        m_ = static_cast<int>(ac_.size());
        LabelOdometer od(dom);
        while (od.next()) {
            Arr a{od.current(), 0};
            for (int i = 0; i < m_; ++i)
                if (a.g[static_cast<std::size_t>(ac_[static_cast<std::size_t>(i)])] == ac_[static_cast<std::size_t>(i)])
                    a.mask |= 1U << i;
            by_level_.resize(std::max<std::size_t>(by_level_.size(), std::popcount(a.mask) + 1U));
            by_level_[static_cast<std::size_t>(std::popcount(a.mask))].push_back(std::move(a));
        }
        for (std::uint32_t s = 1; s < (1U << m_); ++s) subsets_.push_back(s);
        std::stable_sort(subsets_.begin(), subsets_.end(),
                         [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
        s_.assign(std::size_t{1} << m_, -1);
        s_[0] = c;
        for (std::uint32_t s : subsets_) {
            std::vector<int> opts;
            for (int z = 0; z < p.size(); ++z) {
                if (h_.is_minimal(z)) continue;
                for (int i = 0; i < m_; ++i)
                    if (((s >> i) & 1U) && p.leq(ac_[static_cast<std::size_t>(i)], z)) {
                        opts.push_back(z);
                        break;
                    }
            }
            options_.push_back(std::move(opts));
        }
    }

    StartSearchResult run() {
        StartSearchResult r;
        if (m_ > 5) throw std::invalid_argument("start-map search is limited to |A_c| <= 5");
        r.found = dfs(0, r);
        r.exhausted = !r.found && !capped_;
        if (r.found) {
            for (std::uint32_t s = 0; s < (1U << m_); ++s) {
                std::vector<std::string> names;
                for (int i = 0; i < m_; ++i)
                    if ((s >> i) & 1U) names.push_back(p_.name(ac_[static_cast<std::size_t>(i)]));
                r.start.emplace_back(std::move(names), p_.name(s_[s]));
            }
        }
        return r;
    }

private:
    struct Arr {
        Labels g;
        std::uint32_t mask;
    };

    bool dfs(std::size_t i, StartSearchResult& r) {
        const int level = i < subsets_.size() ? std::popcount(subsets_[i]) : m_ + 1;
        // a level is complete once every subset one size up is assigned
        if (i == subsets_.size() || (i > 0 && std::popcount(subsets_[i - 1]) != level)) {
            if (!balanced(level - 2)) return false;
            if (i == subsets_.size()) return balanced(m_);
        }
        for (int z : options_[i]) {
            if (r.examined >= cap_) {
                capped_ = true;
                return false;
            }
            ++r.examined;
            s_[subsets_[i]] = z;
            if (dfs(i + 1, r)) return true;
            if (capped_) return false;
        }
        return false;
    }

    std::string key(const Labels& g, int z) const {
        std::string k(1, static_cast<char>(z + 1));
        for (int w = 0; w < p_.size(); ++w) k.push_back(p_.leq(w, z) ? 0 : static_cast<char>(g[static_cast<std::size_t>(w)] + 2));
        return k;
    }

    // Level k: arrangements with k+1 dots against targets with k dots.
    bool balanced(int k) {
        if (k < 0) return true;
        std::unordered_map<std::string, long> diff;
        if (static_cast<std::size_t>(k + 1) < by_level_.size())
            for (const Arr& a : by_level_[static_cast<std::size_t>(k + 1)]) ++diff[key(a.g, s_[a.mask])];
        if (static_cast<std::size_t>(k) < by_level_.size())
            for (const Arr& a : by_level_[static_cast<std::size_t>(k)]) {
                const int st = s_[a.mask];
                for (int z = 0; z < p_.size(); ++z)
                    if (z != st && a.g[static_cast<std::size_t>(z)] == st) --diff[key(a.g, z)];
            }
        return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
    }

    const DPoset& p_;
    HookSystem h_;
    int c_;
    std::uint64_t cap_;
    std::vector<int> ac_;
    int m_ = 0;
    std::vector<std::vector<Arr>> by_level_;
    std::vector<std::uint32_t> subsets_;
    std::vector<std::vector<int>> options_;
    std::vector<int> s_;
    bool capped_ = false;
};

}  // namespace

StartSearchResult explore_start_maps(const DPoset& p, int c, std::uint64_t cap) {
    if (p.size() > 7) throw std::invalid_argument("start-map search is limited to posets with at most 7 elements");
    if (c < 0 || c >= p.size() || !p.lower_covers(c).empty())
        throw std::invalid_argument("c must be a minimal element");
    return StartSearch(p, c, cap).run();
}

}  // namespace hooklab
