#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hooklab {

// 1-indexed grid position (row, column).
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Dominance order: a >= b iff a is weakly above and weakly left of b.
inline bool dominates(Cell a, Cell b) { return a.row <= b.row && a.col <= b.col; }

std::string to_string(Cell c);
nlohmann::json to_json(Cell c);

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    // lambda_i with lambda_i = 0 for i > length (and for i < 1).
    int part(int i) const;
    bool is_strict() const;
    Partition conjugate() const;
    // Removes one cell from row i; trailing zero parts are dropped.
    Partition remove_from_row(int i) const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);
    explicit StrictPartition(const Partition& p);

    const Partition& partition() const { return p_; }
    operator const Partition&() const { return p_; }
    const std::vector<int>& parts() const { return p_.parts(); }
    int length() const { return p_.length(); }
    int size() const { return p_.size(); }
    int part(int i) const { return p_.part(i); }

private:
    Partition p_;
};

// Accepts "3,2,2" or, when every part is a single digit, "322".
Partition parse_partition(std::string_view text, bool strict = false);
StrictPartition parse_strict_partition(std::string_view text);

// All partitions (or strict partitions) of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> strict_partitions_of(int n);

// Ordinary or shifted Young diagram. Cells are indexed in row-major order.
class Diagram {
public:
    Diagram(const Partition& lambda, bool shifted);

    const Partition& partition() const { return lambda_; }
    bool shifted() const { return shifted_; }
    int size() const { return static_cast<int>(cells_.size()); }
    int rows() const { return lambda_.length(); }

    int row_start(int i) const { return shifted_ ? i : 1; }
    int row_end(int i) const;

    bool contains(Cell z) const;
    int index(Cell z) const;  // -1 when outside
    Cell cell(int idx) const { return cells_[static_cast<std::size_t>(idx)]; }
    const std::vector<Cell>& cells() const { return cells_; }

    const std::vector<Cell>& corners() const { return corners_; }
    bool is_corner(Cell z) const;
    bool is_corner_index(int idx) const { return corner_flag_[static_cast<std::size_t>(idx)] != 0; }

    // Closed-form hook length; throws std::out_of_range outside the diagram.
    int hook_length(Cell z) const;
    // Total variant: 1 for cells outside the diagram.
    int hook_length_or_one(Cell z) const;
    // Hook cells walked geometrically: arm, leg, then (shifted) row j+1.
    std::vector<Cell> hook_cells(Cell z) const;
    std::vector<Cell> punctured_hook_cells(Cell z) const;
    // Hook as cell indices, owner first (precomputed).
    const std::vector<int>& hook(int idx) const { return hooks_[static_cast<std::size_t>(idx)]; }
    bool in_hook(Cell owner, Cell w) const;
    bool in_punctured_hook(Cell owner, Cell w) const { return owner != w && in_hook(owner, w); }

    nlohmann::json to_json() const;

private:
    Partition lambda_;
    Partition conj_;
    bool shifted_;
    std::vector<Cell> cells_;
    std::vector<int> row_offset_;
    std::vector<Cell> corners_;
    std::vector<std::uint8_t> corner_flag_;
    std::vector<std::vector<int>> hooks_;
};

}  // namespace hooklab
