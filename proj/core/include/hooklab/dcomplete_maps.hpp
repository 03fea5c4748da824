#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooklab/bijection.hpp"
#include "hooklab/dposet.hpp"

namespace hooklab {

class UnsupportedConstruction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// s_c and e_c for a minimal element c of P, built along P's construction
// tree. Throws UnsupportedConstruction for posets without one, and for slant
// sums whose hook sets do not split along the two parts.
std::shared_ptr<const CornerMaps> se_maps(const DPoset& p, int c);

struct ConjectureOptions {
    // Exhaustive when the space fits the enumeration bound, else sampled.
    std::uint64_t samples = 20000;
    std::uint64_t seed = 0;  // 0: library default
    // Cross-check preimages() when the exhaustive space is at most this large.
    std::uint64_t inverse_check_limit = 200000;
};

struct ConjectureReport {
    std::string corner;
    bool supported = true;
    std::string unsupported_reason;
    bool exhaustive = false;
    BigInt space;
    PropertyReport properties;

    bool pass() const { return supported && properties.pass(); }
    nlohmann::json to_json() const;
};

ConjectureReport verify_conjecture(const DPoset& p, int c, const ConjectureOptions& options = {});
// Every minimal element in turn.
std::vector<ConjectureReport> verify_conjecture_all(const DPoset& p, const ConjectureOptions& options = {});

// Brute-force search for a start map s : P(A_c) -> P admitting some e with
// (P1)-(P3). For a fixed s such an e exists exactly when, for every level k,
// target z and labelling tau of the elements not below z, the arrangements
// with k+1 dots, s = z and restriction tau are as many as those with k dots,
// G_z = s(G) and restriction tau. Candidates are visited in lexicographic
// order; the search stops at the first success or after `cap` candidates.
struct StartSearchResult {
    bool found = false;
    bool exhausted = false;  // every candidate was examined
    std::uint64_t examined = 0;
    std::vector<std::pair<std::vector<std::string>, std::string>> start;  // dot set -> s, when found

    nlohmann::json to_json() const;
};

StartSearchResult explore_start_maps(const DPoset& p, int c, std::uint64_t cap = 1000000);

}  // namespace hooklab
