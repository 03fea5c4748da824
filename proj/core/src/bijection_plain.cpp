#include "hooklab/bijection_plain.hpp"

#include <set>
#include <stdexcept>

namespace hooklab {

Cell start_square_plain(IndexSet A, IndexSet B, Cell corner) {
    return {A.empty() ? corner.row : std::min(A.min(), corner.row), B.empty() ? corner.col : std::min(B.min(), corner.col)};
}

SplitCell row_column_split(Cell z, Cell corner, Cell label) {
    const int r = corner.row, s = corner.col;
    if (label.row == z.row) {
        if (label.col > s) return {0, label};
        return {1, {r, label.col}};
    }
    if (label.col == z.col && label.row <= r) return {0, {label.row, s}};
    return {1, label};
}

std::optional<Cell> row_column_join(const Diagram& d, Cell z, Cell corner, SplitCell piece) {
    const int r = corner.row, s = corner.col;
    const Cell w = piece.cell;
    std::optional<Cell> out;
    if (piece.part == 0) {
        if (w.row == z.row && w.col > s)
            out = w;
        else if (w.col == s && w.row > z.row && w.row <= r)
            out = Cell{w.row, z.col};
    } else {
        if (w.row == r && w.col > z.col && w.col <= s)
            out = Cell{z.row, w.col};
        else
            out = w;
    }
    if (!out || !d.in_punctured_hook(z, *out) || row_column_split(z, corner, *out) != piece) return std::nullopt;
    return out;
}

PlainMaps::PlainMaps(std::shared_ptr<const Diagram> d, std::shared_ptr<const HookSystem> h, Cell corner)
    : d_(std::move(d)), h_(std::move(h)), corner_(corner), c_(d_->index(corner)) {
    if (d_->shifted()) throw std::invalid_argument("plain maps need an ordinary diagram");
    if (!d_->is_corner(corner)) throw std::invalid_argument(to_string(corner) + " is not a corner");
}

int PlainMaps::start(const Labels& g) const {
    DotSets ds = dot_sets(*d_, corner_, g);
    return d_->index(start_square_plain(ds.A, ds.B, corner_));
}

Labels PlainMaps::erase(const Labels& g) const {
    DotSets ds = dot_sets(*d_, corner_, g);
    if (ds.count() == 0) return g;
    const int r = corner_.row, s = corner_.col;
    const Cell st = start_square_plain(ds.A, ds.B, corner_);
    const int i = st.row, j = st.col;
    Labels out = g;
    auto set = [&](Cell z, Cell v) { out[static_cast<std::size_t>(d_->index(z))] = d_->index(v); };
    if (ds.B.empty()) {
        set({i, s}, start_square_plain(ds.A.without(i), ds.B, corner_));
        return out;
    }
    if (ds.A.empty()) {
        set({r, j}, start_square_plain(ds.A, ds.B.without(j), corner_));
        return out;
    }
    const Cell label = d_->cell(g[static_cast<std::size_t>(d_->index(st))]);
    SplitCell piece = row_column_split(st, corner_, label);
    IndexSet A = ds.A, B = ds.B;
    if (piece.part == 0) {
        set({i, s}, piece.cell);
        A.erase(i);
    } else {
        set({r, j}, piece.cell);
        B.erase(j);
    }
    set(st, start_square_plain(A, B, corner_));
    return out;
}

std::vector<Labels> PlainMaps::preimages(const Labels& gp, int zi) const {
    std::vector<Labels> out;
    std::set<Labels> seen;
    const LabelDomains dom = domains();
    if (zi < 0 || zi >= d_->size() || d_->is_corner_index(zi)) return out;
    const Cell z = d_->cell(zi);
    const int r = corner_.row, s = corner_.col;
    auto consider = [&](Labels g) {
        if (!seen.insert(g).second) return;
        if (labels_valid(dom, g) && dot_count(g) == dot_count(gp) + 1 && start(g) == zi && erase(g) == gp)
            out.push_back(std::move(g));
    };
    if (z.row == r || z.col == s) {
        Labels g = gp;
        g[static_cast<std::size_t>(zi)] = zi;
        consider(std::move(g));
        return out;
    }
    const Cell targets[2] = {{z.row, s}, {r, z.col}};
    for (int part = 0; part < 2; ++part) {
        const int t = d_->index(targets[part]);
        const int cur = gp[static_cast<std::size_t>(t)];
        if (cur == t) continue;
        auto l = row_column_join(*d_, z, corner_, {part, d_->cell(cur)});
        if (!l) continue;
        Labels g = gp;
        g[static_cast<std::size_t>(t)] = t;
        g[static_cast<std::size_t>(zi)] = d_->index(*l);
        consider(std::move(g));
    }
    return out;
}

GArrangement erase_dot_plain(const Diagram& d, const GArrangement& g) {
    auto dp = std::make_shared<const Diagram>(d);
    PlainMaps m(dp, std::make_shared<const HookSystem>(HookSystem::from_diagram(d)), g.corner);
    return {g.corner, m.erase(g.labels)};
}

}  // namespace hooklab
