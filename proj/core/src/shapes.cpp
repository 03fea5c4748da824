#include "hooklab/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hooklab {

std::string to_string(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

nlohmann::json to_json(Cell c) { return nlohmann::json::array({c.row, c.col}); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.assign(static_cast<std::size_t>(parts_.front()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(c));
}

Partition Partition::remove_from_row(int i) const {
    if (i < 1 || i > length()) throw std::out_of_range("row outside partition");
    std::vector<int> p = parts_;
    --p[static_cast<std::size_t>(i - 1)];
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

StrictPartition::StrictPartition(std::vector<int> parts) : StrictPartition(Partition(std::move(parts))) {}

StrictPartition::StrictPartition(const Partition& p) : p_(p) {
    if (!p_.is_strict()) throw std::invalid_argument("strict partition parts must be strictly decreasing");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view tok) {
    tok = trim(tok);
    if (tok.empty()) throw std::invalid_argument("empty part in partition");
    int v = 0;
    for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("non-numeric token in partition: '" + std::string(tok) + "'");
        v = v * 10 + (ch - '0');
        if (v > 1000000) throw std::invalid_argument("partition part too large");
    }
    return v;
}

}  // namespace

Partition parse_partition(std::string_view text, bool strict) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty partition");
    std::vector<int> parts;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string_view tok = trim(text.substr(pos, next - pos));
            // a single trailing comma is allowed ("12,")
            if (!(tok.empty() && next == text.size() && !parts.empty())) parts.push_back(parse_int(tok));
            pos = next + 1;
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("non-numeric token in partition: '" + std::string(1, ch) + "'");
            parts.push_back(ch - '0');
        }
    }
    Partition p(std::move(parts));
    if (strict && !p.is_strict())
        throw std::invalid_argument("strict partition parts must be strictly decreasing");
    return p;
}

StrictPartition parse_strict_partition(std::string_view text) {
    return StrictPartition(parse_partition(text, true));
}

namespace {

void gen_partitions(int n, int max_part, bool strict, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, strict ? p - 1 : p, strict, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n >= 1) gen_partitions(n, n, false, cur, out);
    return out;
}

std::vector<Partition> strict_partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n >= 1) gen_partitions(n, n, true, cur, out);
    return out;
}

Diagram::Diagram(const Partition& lambda, bool shifted)
    : lambda_(lambda), conj_(lambda.conjugate()), shifted_(shifted) {
    if (shifted_ && !lambda_.is_strict())
        throw std::invalid_argument("shifted diagrams require a strict partition");
    row_offset_.assign(static_cast<std::size_t>(rows() + 2), 0);
    for (int i = 1; i <= rows(); ++i) {
        row_offset_[static_cast<std::size_t>(i)] = static_cast<int>(cells_.size());
        for (int j = row_start(i); j <= row_end(i); ++j) cells_.push_back({i, j});
    }
    row_offset_[static_cast<std::size_t>(rows() + 1)] = static_cast<int>(cells_.size());
    corner_flag_.assign(cells_.size(), 0);
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        Cell z = cells_[k];
        if (!contains({z.row + 1, z.col}) && !contains({z.row, z.col + 1})) {
            corners_.push_back(z);
            corner_flag_[k] = 1;
        }
    }
    hooks_.reserve(cells_.size());
    for (Cell z : cells_) {
        std::vector<int> h;
        for (Cell w : hook_cells(z)) h.push_back(index(w));
        hooks_.push_back(std::move(h));
    }
}

int Diagram::row_end(int i) const {
    if (i < 1 || i > rows()) return 0;
    return lambda_.part(i) + (shifted_ ? i - 1 : 0);
}

bool Diagram::contains(Cell z) const {
    if (z.row < 1 || z.row > rows()) return false;
    return z.col >= row_start(z.row) && z.col <= row_end(z.row);
}

int Diagram::index(Cell z) const {
    if (!contains(z)) return -1;
    return row_offset_[static_cast<std::size_t>(z.row)] + (z.col - row_start(z.row));
}

bool Diagram::is_corner(Cell z) const {
    int k = index(z);
    return k >= 0 && is_corner_index(k);
}

int Diagram::hook_length(Cell z) const {
    if (!contains(z)) throw std::out_of_range("cell " + hooklab::to_string(z) + " outside diagram");
    const int i = z.row, j = z.col;
    if (!shifted_) return lambda_.part(i) + conj_.part(j) - i - j + 1;
    const int l = lambda_.length();
    if (j < l) return lambda_.part(i) + lambda_.part(j + 1);
    int kmax = 0;
    for (int k = 1; k <= l; ++k) {
        const int d = j + 1 - k;
        if (lambda_.part(k) >= d && d >= 1) kmax = k;
    }
    return lambda_.part(i) + kmax - j;
}

int Diagram::hook_length_or_one(Cell z) const { return contains(z) ? hook_length(z) : 1; }

std::vector<Cell> Diagram::hook_cells(Cell z) const {
    if (!contains(z)) throw std::out_of_range("cell " + hooklab::to_string(z) + " outside diagram");
    std::vector<Cell> out;
    for (int q = z.col; q <= row_end(z.row); ++q) out.push_back({z.row, q});
    for (int k = z.row + 1; contains({k, z.col}); ++k) out.push_back({k, z.col});
    if (shifted_ && z.col + 1 <= rows()) {
        const int b = z.col + 1;
        for (int q = row_start(b); q <= row_end(b); ++q) out.push_back({b, q});
    }
    return out;
}

std::vector<Cell> Diagram::punctured_hook_cells(Cell z) const {
    auto h = hook_cells(z);
    h.erase(h.begin());
    return h;
}

bool Diagram::in_hook(Cell owner, Cell w) const {
    if (!contains(owner) || !contains(w)) return false;
    if (w.row == owner.row && w.col >= owner.col) return true;
    if (w.col == owner.col && w.row >= owner.row) return true;
    return shifted_ && w.row == owner.col + 1;
}

nlohmann::json Diagram::to_json() const {
    nlohmann::json cells = nlohmann::json::array();
    for (Cell z : cells_) cells.push_back(hooklab::to_json(z));
    nlohmann::json corners = nlohmann::json::array();
    for (Cell z : corners_) corners.push_back(hooklab::to_json(z));
    return {{"parts", lambda_.parts()}, {"shifted", shifted_}, {"cells", cells}, {"corners", corners}};
}

}  // namespace hooklab
