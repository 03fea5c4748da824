#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooklab/bigint.hpp"
#include "hooklab/shapes.hpp"

namespace hooklab {

// Finite poset presented through its hooks: elements 0..n-1, each with an
// ordered hook (owner first), a set of minimal elements and the order itself.
// Diagram cells use their row-major index as element id.
class HookSystem {
public:
    HookSystem(std::vector<std::vector<int>> hooks, std::vector<std::uint8_t> minimal,
               std::vector<std::uint8_t> leq_matrix);
    static HookSystem from_diagram(const Diagram& d);

    int size() const { return static_cast<int>(hooks_.size()); }
    const std::vector<int>& hook(int z) const { return hooks_[static_cast<std::size_t>(z)]; }
    bool in_hook(int owner, int w) const { return member_[idx(owner, w)] != 0; }
    bool in_punctured_hook(int owner, int w) const { return owner != w && in_hook(owner, w); }
    bool is_minimal(int z) const { return minimal_flag_[static_cast<std::size_t>(z)] != 0; }
    const std::vector<int>& minimal() const { return minimal_; }
    // a <= b in the poset (a lies in the down-set of b)
    bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }

private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * hooks_.size() + static_cast<std::size_t>(b);
    }
    std::vector<std::vector<int>> hooks_;
    std::vector<std::uint8_t> member_;
    std::vector<std::uint8_t> minimal_flag_;
    std::vector<int> minimal_;
    std::vector<std::uint8_t> leq_;
};

// Label maps. Entry z is the label of element z, or -1 on minimal elements.
using Labels = std::vector<int>;
using LabelDomains = std::vector<std::vector<int>>;

inline constexpr int kNoLabel = -1;

// F side: every non-minimal z gets a label in its punctured hook.
LabelDomains f_domains(const HookSystem& h);
// G side for minimal c: the whole hook when c is in it, else the punctured hook.
LabelDomains g_domains(const HookSystem& h, int c);

BigInt space_size(const LabelDomains& dom);
bool labels_valid(const LabelDomains& dom, const Labels& g);
int dot_count(const Labels& g);

// Lazy odometer over a product of label domains, first element slowest.
class LabelOdometer {
public:
    explicit LabelOdometer(LabelDomains domains);
    // Advances to the next configuration; the first call yields the first one.
    bool next();
    const Labels& current() const { return cur_; }

private:
    LabelDomains dom_;
    std::vector<std::size_t> pos_;
    std::vector<std::size_t> active_;
    Labels cur_;
    bool started_ = false;
    bool done_ = false;
};

Labels sample_labels(const LabelDomains& dom, std::mt19937_64& rng);

// Row/column sets over 1..63.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
    static IndexSet of(std::initializer_list<int> xs);

    bool contains(int i) const { return i >= 0 && i < 64 && ((bits_ >> i) & 1U); }
    void insert(int i);
    void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
    IndexSet without(int i) const {
        IndexSet s = *this;
        s.erase(i);
        return s;
    }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    int min() const { return std::countr_zero(bits_); }
    int max() const { return 63 - std::countl_zero(bits_); }
    std::uint64_t bits() const { return bits_; }
    std::vector<int> to_vector() const;
    IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
    IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
    // elements <= k
    IndexSet up_to(int k) const;
    friend bool operator==(IndexSet, IndexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

struct FArrangement {
    Cell start;
    Labels labels;
};

struct GArrangement {
    Cell corner;
    Labels labels;
};

nlohmann::ordered_json to_json(const Diagram& d, const FArrangement& f);
nlohmann::ordered_json to_json(const Diagram& d, const GArrangement& g);

// Stream of (s, F) pairs: start cell slowest, then labels in row-major order.
class FStream {
public:
    explicit FStream(std::shared_ptr<const Diagram> d);
    bool next();
    FArrangement current() const;
    const Labels& labels() const { return od_.current(); }
    Cell start() const { return d_->cell(start_); }

private:
    std::shared_ptr<const Diagram> d_;
    LabelDomains dom_;
    LabelOdometer od_;
    int start_ = 0;
};

class GStream {
public:
    GStream(std::shared_ptr<const Diagram> d, Cell corner);
    bool next() { return od_.next(); }
    GArrangement current() const { return {corner_, od_.current()}; }
    const Labels& labels() const { return od_.current(); }

private:
    std::shared_ptr<const Diagram> d_;
    Cell corner_;
    LabelOdometer od_;
};

// Throws std::invalid_argument if the space exceeds the enumeration bound.
FStream enumerate_F(std::shared_ptr<const Diagram> d);
GStream enumerate_G(std::shared_ptr<const Diagram> d, Cell corner);

LabelDomains f_domains(const Diagram& d);
LabelDomains g_domains(const Diagram& d, Cell corner);
BigInt f_space_size(const Diagram& d);
BigInt g_space_size(const Diagram& d, Cell corner);

// Dots in the shaded row and columns of corner (r,s):
// A = {i : G(i,s) = (i,s)}, B = {j : G(r,j) = (r,j)}, C = {i : G(i,r-1) = (i,r-1)}.
struct DotSets {
    IndexSet A, B, C;
    int count() const { return A.size() + B.size() + C.size(); }
    friend bool operator==(const DotSets&, const DotSets&) = default;
};

DotSets dot_sets(const Diagram& d, Cell corner, const Labels& g);
inline DotSets dot_sets(const Diagram& d, const GArrangement& g) { return dot_sets(d, g.corner, g.labels); }

enum class FormationKind {
    Empty,
    RightStick,
    LeftStick,
    RightSnake,
    LeftSnake,
    StickDot,
    Block,
    BlockDot,
    SnakeDot,
    SnakeBlock,
    SnakeBlockDot,
};

// Right = column s (set A), Left = column r-1 (set C).
enum class Side { None, Left, Right };

enum class StartRule { S1, S2, S3, S4, S5 };

std::string to_string(FormationKind k);
std::string to_string(Side s);
std::string to_string(StartRule r);

// Shape of the dots in the shaded columns, read from the top row down.
struct Formation {
    FormationKind kind = FormationKind::Empty;
    StartRule rule = StartRule::S1;
    Side stick = Side::None;   // StickDot: side of the stick
    Side snake = Side::None;   // snake formations: direction of the snake
    Side dot = Side::None;     // side of the dot that ends the leading formation
    int dot_row = 0;
    int snake_first = 0;
    int snake_last = 0;
    int block_first = 0;
    int block_second = 0;
    int block_length = 0;

    nlohmann::json to_json() const;
};

Formation classify_formation(IndexSet A, IndexSet C);

}  // namespace hooklab
