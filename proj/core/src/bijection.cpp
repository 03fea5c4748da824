#include "hooklab/bijection.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hooklab/config.hpp"

namespace hooklab {

namespace {

std::string pack(const Labels& g, int extra) {
    std::string k;
    k.reserve(g.size() + 1);
    k.push_back(static_cast<char>(extra + 1));
    for (int v : g) k.push_back(static_cast<char>(v + 1));
    return k;
}

void require_bound(const BigInt& size) {
    if (size > max_enumeration())
        throw std::invalid_argument("space of size " + size.str() + " exceeds the enumeration bound");
}

void note(std::vector<std::string>& w, std::string msg) {
    if (w.size() < 8) w.push_back(std::move(msg));
}

bool verifies(const CornerMaps& m, const LabelDomains& dom, const Labels& g, const Labels& gp, int z) {
    if (!labels_valid(dom, g)) return false;
    if (dot_count(g) != dot_count(gp) + 1) return false;
    if (m.start(g) != z) return false;
    return m.erase(g) == gp;
}

}  // namespace

std::string labels_to_string(const Labels& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ' ';
        s += g[i] == kNoLabel ? "-" : std::to_string(g[i]);
    }
    return s + "]";
}

std::vector<Labels> CornerMaps::preimages(const Labels& gp, int z) const {
    const HookSystem& h = system();
    const LabelDomains dom = domains();
    std::vector<Labels> out;
    std::set<Labels> seen;
    auto consider = [&](Labels g) {
        if (seen.count(g)) return;
        seen.insert(g);
        if (verifies(*this, dom, g, gp, z)) out.push_back(std::move(g));
    };
    if (z < 0 || z >= h.size() || h.is_minimal(z)) return out;
    if (h.in_hook(z, corner())) {
        Labels g = gp;
        g[static_cast<std::size_t>(z)] = z;
        consider(std::move(g));
    }
    for (int l : dom[static_cast<std::size_t>(z)]) {
        if (l == z) continue;
        for (int w = 0; w < h.size(); ++w) {
            if (w == z || h.is_minimal(w) || !h.in_hook(w, corner())) continue;
            if (gp[static_cast<std::size_t>(w)] == w) continue;
            Labels g = gp;
            g[static_cast<std::size_t>(z)] = l;
            g[static_cast<std::size_t>(w)] = w;
            consider(std::move(g));
        }
    }
    return out;
}

Bijection::Bijection(std::vector<std::shared_ptr<const CornerMaps>> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw std::invalid_argument("bijection needs at least one corner");
    const HookSystem& h = system();
    by_element_.assign(static_cast<std::size_t>(h.size()), -1);
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const int c = maps_[k]->corner();
        if (!h.is_minimal(c)) throw std::invalid_argument("corner maps attached to a non-minimal element");
        by_element_[static_cast<std::size_t>(c)] = static_cast<int>(k);
    }
    for (int c : h.minimal())
        if (by_element_[static_cast<std::size_t>(c)] < 0) throw std::invalid_argument("missing corner maps");
}

const CornerMaps& Bijection::maps_for(int corner) const {
    if (corner < 0 || corner >= system().size() || by_element_[static_cast<std::size_t>(corner)] < 0)
        throw std::invalid_argument("not a corner");
    return *maps_[static_cast<std::size_t>(by_element_[static_cast<std::size_t>(corner)])];
}

PhiImage Bijection::phi(int corner, const Labels& g) const {
    const CornerMaps& m = maps_for(corner);
    PhiImage out{m.start(g), g};
    for (int k = dot_count(g); k > 0; --k) out.labels = m.erase(out.labels);
    if (dot_count(out.labels) != 0) throw std::runtime_error("erase did not remove every dot");
    return out;
}

std::vector<Labels> Bijection::chain(int corner, const Labels& g) const {
    const CornerMaps& m = maps_for(corner);
    std::vector<Labels> out{g};
    for (int k = dot_count(g); k > 0; --k) out.push_back(m.erase(out.back()));
    return out;
}

std::pair<int, Labels> Bijection::phi_inverse(int start, const Labels& f) const {
    const HookSystem& h = system();
    if (start < 0 || start >= h.size()) throw std::invalid_argument("start outside the poset");
    if (!labels_valid(f_domains(h), f)) throw std::invalid_argument("labels do not form an F-arrangement");
    std::vector<int> walk{start};
    while (!h.is_minimal(walk.back())) {
        const int next = f[static_cast<std::size_t>(walk.back())];
        if (next == kNoLabel || !h.in_punctured_hook(walk.back(), next))
            throw std::runtime_error("hook walk left the punctured hook");
        walk.push_back(next);
    }
    const int c = walk.back();
    const CornerMaps& m = maps_for(c);
    Labels g = f;
    for (std::size_t t = walk.size() - 1; t-- > 0;) {
        auto pre = m.preimages(g, walk[t]);
        if (pre.size() != 1)
            throw std::runtime_error("expected one preimage at step " + std::to_string(t) + ", found " +
                                     std::to_string(pre.size()));
        g = std::move(pre.front());
    }
    return {c, g};
}

void PropertyReport::merge(const PropertyReport& o) {
    arrangements += o.arrangements;
    p1_failures += o.p1_failures;
    p2_failures += o.p2_failures;
    p3_pairs += o.p3_pairs;
    p3_failures += o.p3_failures;
    inverse_failures += o.inverse_failures;
    errors += o.errors;
    for (const auto& w : o.witnesses) note(witnesses, w);
}

nlohmann::json PropertyReport::to_json() const {
    return {{"pass", pass()},           {"arrangements", arrangements}, {"p1_failures", p1_failures},
            {"p2_failures", p2_failures}, {"p3_pairs", p3_pairs},       {"p3_failures", p3_failures},
            {"inverse_failures", inverse_failures}, {"errors", errors}, {"witnesses", witnesses}};
}

namespace {

// (P1) and (P2) for one arrangement; returns false (after recording) on error.
bool check_step(const CornerMaps& m, const LabelDomains& dom, const Labels& g, int st, const Labels& e,
                PropertyReport& rep) {
    const HookSystem& h = m.system();
    const int k = dot_count(g);
    if (k == 0) {
        if (st != m.corner() || e != g) {
            ++rep.p1_failures;
            note(rep.witnesses, "P1 (zero dots) " + labels_to_string(g));
        }
        return true;
    }
    if (!labels_valid(dom, e) || dot_count(e) != k - 1) {
        ++rep.p1_failures;
        note(rep.witnesses, "P1 " + labels_to_string(g));
        return false;
    }
    const int ns = m.start(e);
    bool ok = e[static_cast<std::size_t>(st)] == ns && h.in_punctured_hook(st, ns);
    for (std::size_t z = 0; ok && z < g.size(); ++z)
        if (e[z] != g[z] && !h.leq(static_cast<int>(z), st)) ok = false;
    if (!ok) {
        ++rep.p2_failures;
        note(rep.witnesses, "P2 " + labels_to_string(g));
    }
    return true;
}

}  // namespace

PropertyReport verify_properties_exhaustive(const CornerMaps& m, bool check_inverse) {
    const HookSystem& h = m.system();
    const LabelDomains dom = m.domains();
    require_bound(space_size(dom));
    PropertyReport rep;
    std::unordered_map<std::string, std::uint32_t> buckets;
    {
        LabelOdometer od(dom);
        while (od.next()) {
            const Labels& g = od.current();
            ++rep.arrangements;
            try {
                const int st = m.start(g);
                Labels e = m.erase(g);
                if (check_step(m, dom, g, st, e, rep) && dot_count(g) > 0) ++buckets[pack(e, st)];
            } catch (const std::exception& ex) {
                ++rep.errors;
                note(rep.witnesses, std::string("error ") + ex.what() + " " + labels_to_string(g));
            }
        }
    }
    LabelOdometer od(dom);
    while (od.next()) {
        const Labels& gp = od.current();
        int st = -1;
        try {
            st = m.start(gp);
        } catch (const std::exception&) {
            continue;  // already counted above
        }
        for (int z = 0; z < h.size(); ++z) {
            if (z == st || gp[static_cast<std::size_t>(z)] != st) continue;
            ++rep.p3_pairs;
            auto it = buckets.find(pack(gp, z));
            const std::uint32_t count = it == buckets.end() ? 0 : it->second;
            if (count != 1) {
                ++rep.p3_failures;
                note(rep.witnesses, "P3 " + std::to_string(count) + " preimages at " + std::to_string(z) + " for " +
                                        labels_to_string(gp));
            }
            if (check_inverse) {
                try {
                    if (m.preimages(gp, z).size() != count) {
                        ++rep.inverse_failures;
                        note(rep.witnesses, "inverse at " + std::to_string(z) + " for " + labels_to_string(gp));
                    }
                } catch (const std::exception& ex) {
                    ++rep.errors;
                    note(rep.witnesses, std::string("inverse error ") + ex.what());
                }
            }
        }
    }
    return rep;
}

PropertyReport verify_properties_sampled(const CornerMaps& m, std::uint64_t samples, std::mt19937_64& rng) {
    const LabelDomains dom = m.domains();
    PropertyReport rep;
    for (std::uint64_t t = 0; t < samples; ++t) {
        Labels g = sample_labels(dom, rng);
        ++rep.arrangements;
        try {
            const int st = m.start(g);
            Labels e = m.erase(g);
            if (!check_step(m, dom, g, st, e, rep) || dot_count(g) == 0) continue;
            ++rep.p3_pairs;
            auto pre = m.preimages(e, st);
            if (pre.size() != 1 || pre.front() != g) {
                ++rep.p3_failures;
                note(rep.witnesses, "P3 " + std::to_string(pre.size()) + " candidates for " + labels_to_string(g));
            }
        } catch (const std::exception& ex) {
            ++rep.errors;
            note(rep.witnesses, std::string("error ") + ex.what() + " " + labels_to_string(g));
        }
    }
    return rep;
}

nlohmann::json RoundTripReport::to_json() const {
    return {{"pass", pass()},
            {"g_checked", g_checked},
            {"f_checked", f_checked},
            {"failures", failures},
            {"distinct_images", distinct_images},
            {"witnesses", witnesses}};
}

namespace {

void check_g(const Bijection& b, int c, const Labels& g, RoundTripReport& rep, std::unordered_set<std::string>* images) {
    ++rep.g_checked;
    try {
        PhiImage img = b.phi(c, g);
        if (images) images->insert(pack(img.labels, img.start));
        auto back = b.phi_inverse(img.start, img.labels);
        if (back.first != c || back.second != g) {
            ++rep.failures;
            note(rep.witnesses, "G round trip at corner " + std::to_string(c) + " " + labels_to_string(g));
        }
    } catch (const std::exception& ex) {
        ++rep.failures;
        note(rep.witnesses, std::string("G error ") + ex.what() + " " + labels_to_string(g));
    }
}

void check_f(const Bijection& b, int start, const Labels& f, RoundTripReport& rep) {
    ++rep.f_checked;
    try {
        auto [c, g] = b.phi_inverse(start, f);
        PhiImage img = b.phi(c, g);
        if (img.start != start || img.labels != f) {
            ++rep.failures;
            note(rep.witnesses, "F round trip from " + std::to_string(start) + " " + labels_to_string(f));
        }
    } catch (const std::exception& ex) {
        ++rep.failures;
        note(rep.witnesses, std::string("F error ") + ex.what() + " " + labels_to_string(f));
    }
}

}  // namespace

RoundTripReport roundtrip_exhaustive(const Bijection& b) {
    const HookSystem& h = b.system();
    RoundTripReport rep;
    std::unordered_set<std::string> images;
    for (const auto& m : b.all_maps()) {
        const LabelDomains dom = m->domains();
        require_bound(space_size(dom));
        LabelOdometer od(dom);
        while (od.next()) check_g(b, m->corner(), od.current(), rep, &images);
    }
    rep.distinct_images = images.size();
    if (rep.distinct_images != rep.g_checked) {
        ++rep.failures;
        note(rep.witnesses, "Phi is not injective");
    }
    const LabelDomains fdom = f_domains(h);
    require_bound(space_size(fdom) * h.size());
    for (int st = 0; st < h.size(); ++st) {
        LabelOdometer od(fdom);
        while (od.next()) check_f(b, st, od.current(), rep);
    }
    if (rep.f_checked != rep.g_checked) {
        ++rep.failures;
        note(rep.witnesses, "|G| != |F|");
    }
    return rep;
}

RoundTripReport roundtrip_sampled(const Bijection& b, std::uint64_t samples, std::mt19937_64& rng) {
    const HookSystem& h = b.system();
    RoundTripReport rep;
    std::vector<LabelDomains> doms;
    for (const auto& m : b.all_maps()) doms.push_back(m->domains());
    const LabelDomains fdom = f_domains(h);
    std::uniform_int_distribution<std::size_t> pick_corner(0, doms.size() - 1);
    std::uniform_int_distribution<int> pick_start(0, h.size() - 1);
    for (std::uint64_t t = 0; t < samples; ++t) {
        const std::size_t k = pick_corner(rng);
        check_g(b, b.all_maps()[k]->corner(), sample_labels(doms[k], rng), rep, nullptr);
        const int st = pick_start(rng);
        check_f(b, st, sample_labels(fdom, rng), rep);
    }
    return rep;
}

}  // namespace hooklab
