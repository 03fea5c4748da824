#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooklab/arrangements.hpp"

namespace hooklab {

// Maps s = s_c and e = e_c for one minimal element c of a hook system.
class CornerMaps {
public:
    virtual ~CornerMaps() = default;

    virtual const HookSystem& system() const = 0;
    virtual int corner() const = 0;
    virtual int start(const Labels& g) const = 0;
    // Identity on zero-dot arrangements.
    virtual Labels erase(const Labels& g) const = 0;
    // Every G with s(G) = z and e(G) = gp. The default searches arrangements
    // differing from gp at z and at most one other (dot) element.
    virtual std::vector<Labels> preimages(const Labels& gp, int z) const;

    LabelDomains domains() const { return g_domains(system(), corner()); }
};

struct PhiImage {
    int start = -1;
    Labels labels;
    friend bool operator==(const PhiImage&, const PhiImage&) = default;
};

// Phi : (c, G) -> (s(G), e^k(G)) and its inverse through the hook walk.
class Bijection {
public:
    explicit Bijection(std::vector<std::shared_ptr<const CornerMaps>> maps);

    const HookSystem& system() const { return maps_.front()->system(); }
    const CornerMaps& maps_for(int corner) const;
    const std::vector<std::shared_ptr<const CornerMaps>>& all_maps() const { return maps_; }

    PhiImage phi(int corner, const Labels& g) const;
    // Returns the corner and G; throws std::runtime_error when the walk or a
    // preimage step fails.
    std::pair<int, Labels> phi_inverse(int start, const Labels& f) const;
    // G, e(G), e^2(G), ... down to zero dots.
    std::vector<Labels> chain(int corner, const Labels& g) const;

private:
    std::vector<std::shared_ptr<const CornerMaps>> maps_;
    std::vector<int> by_element_;
};

struct PropertyReport {
    std::uint64_t arrangements = 0;
    std::uint64_t p1_failures = 0;
    std::uint64_t p2_failures = 0;
    std::uint64_t p3_pairs = 0;
    std::uint64_t p3_failures = 0;
    std::uint64_t inverse_failures = 0;  // preimages() disagreeing with the true preimage set
    std::uint64_t errors = 0;
    std::vector<std::string> witnesses;

    bool pass() const {
        return p1_failures + p2_failures + p3_failures + inverse_failures + errors == 0;
    }
    void merge(const PropertyReport& o);
    nlohmann::json to_json() const;
};

// (P1)-(P3) over the whole space of c. (P3) counts preimages by bucketing
// every e(G), and cross-checks preimages() on each (G', z) pair when asked.
PropertyReport verify_properties_exhaustive(const CornerMaps& m, bool check_inverse = true);
// (P1), (P2) and (P3)-existence on random arrangements; uniqueness is
// checked among the candidates preimages() produces.
PropertyReport verify_properties_sampled(const CornerMaps& m, std::uint64_t samples, std::mt19937_64& rng);

struct RoundTripReport {
    std::uint64_t g_checked = 0;
    std::uint64_t f_checked = 0;
    std::uint64_t failures = 0;
    std::uint64_t distinct_images = 0;  // exhaustive only
    std::vector<std::string> witnesses;

    bool pass() const { return failures == 0; }
    nlohmann::json to_json() const;
};

// Phi^-1 o Phi on every G and Phi o Phi^-1 on every (s, F); also checks that
// Phi is injective.
RoundTripReport roundtrip_exhaustive(const Bijection& b);
RoundTripReport roundtrip_sampled(const Bijection& b, std::uint64_t samples, std::mt19937_64& rng);

std::string labels_to_string(const Labels& g);

}  // namespace hooklab
