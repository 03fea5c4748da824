#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hooklab/arrangements.hpp"
#include "hooklab/bigint.hpp"
#include "hooklab/shapes.hpp"

namespace hooklab {

class DPoset;

// How a poset was assembled; drives the s/e construction.
struct Construction {
    enum class Kind { Diagram, Diamond, Union, Slant, Custom };
    Kind kind = Kind::Custom;
    Partition lambda;  // Diagram
    bool shifted = false;
    int k = 0;  // Diamond
    std::shared_ptr<const DPoset> left, right;  // Union / Slant: ids of left come first
    int u = -1;  // Slant: element of left covering max(right)
};

// Finite poset on elements 0..n-1 (n <= 64) given by its cover relations.
class DPoset {
public:
    // covers are (lower, upper) pairs; throws if they contain a cycle or are
    // not a transitive reduction.
    DPoset(std::vector<std::string> names, std::vector<std::pair<int, int>> covers,
           std::shared_ptr<const Construction> construction = nullptr);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    int index(std::string_view name) const;  // -1 when absent
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int v) const { return up_cov_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& lower_covers(int v) const { return low_cov_[static_cast<std::size_t>(v)]; }
    bool covers(int lower, int upper) const;

    bool leq(int a, int b) const { return (down_[static_cast<std::size_t>(b)] >> a) & 1U; }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    std::uint64_t down(int v) const { return down_[static_cast<std::size_t>(v)]; }
    std::uint64_t up(int v) const { return up_[static_cast<std::size_t>(v)]; }
    std::uint64_t all() const;

    std::vector<int> minimal() const;
    std::vector<int> maximal() const;
    // Connected components as element masks, ordered by smallest element.
    std::vector<std::uint64_t> components() const;

    const Construction* construction() const { return construction_.get(); }
    nlohmann::json to_json() const;

private:
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_cov_, low_cov_;
    std::vector<std::uint64_t> down_, up_;
    std::shared_ptr<const Construction> construction_;
};

DPoset build_diamond(int k);
// Cells ordered row-major; (i,j) <= (i',j') iff (i',j') is weakly above-left.
DPoset build_diagram(const Partition& lambda, bool shifted);
DPoset build_chain(int k);
DPoset disjoint_union(const DPoset& a, const DPoset& b);
// Adds the cover max(b) < u; u is an element of a. Element names get the
// prefixes "1." and "2.", as in disjoint_union.
DPoset slant_sum(const DPoset& a, int u, const DPoset& b);

// diamond:K | chain:K | diagram:PARTITION | shifted:PARTITION |
// union(P,Q) | slant(P@NAME,Q). Throws std::invalid_argument on bad input.
DPoset parse_poset(std::string_view text);

struct DInterval {
    int bottom = -1;
    int top = -1;
    int k = 0;
    int x = -1, y = -1;  // the incomparable pair
};

// [w,z] isomorphic to d_k(1) for some k >= 3.
std::optional<DInterval> dk_interval(const DPoset& p, int w, int z);
// [w,y] isomorphic to d_k(1) minus its top, k >= 4.
std::optional<DInterval> dk_minus_interval(const DPoset& p, int w, int y);

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::vector<std::string> witnesses;
};

struct DCompleteReport {
    std::vector<AxiomResult> axioms;
    bool pass() const;
    nlohmann::json to_json() const;
};

DCompleteReport verify_dcomplete(const DPoset& p);

// Hook lengths of the subposet on `mask` (an up-closed set), by the interval
// recursion. Entries outside the mask are 0.
std::vector<int> hook_lengths_on(const DPoset& p, std::uint64_t mask);

struct DHookData {
    int element = -1;
    int hook_length = 0;
    std::vector<int> hook_set;
};

// Throws std::invalid_argument if p fails verify_dcomplete or a component
// lacks a unique maximal element.
std::vector<DHookData> hook_lengths_dcomplete(const DPoset& p);
HookSystem hook_system(const DPoset& p);

struct DBranchingReport {
    BigInt lhs;
    BigInt rhs;
    std::vector<std::pair<std::string, BigInt>> summands;
    bool equal = false;
    nlohmann::json to_json() const;
};

DBranchingReport check_branching_dcomplete(const DPoset& p);

BigInt count_linear_extensions(const DPoset& p);
// n! / prod h; throws std::logic_error when not integral.
BigInt hook_formula_count(const DPoset& p);

}  // namespace hooklab
