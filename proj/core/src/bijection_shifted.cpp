#include "hooklab/bijection_shifted.hpp"

#include <set>
#include <stdexcept>

#include "hooklab/bijection_plain.hpp"

namespace hooklab {

StartSquare start_square(IndexSet A, IndexSet B, IndexSet C, Cell corner) {
    const int r = corner.row, s = corner.col;
    const IndexSet AC = A | C;
    StartSquare out;
    out.formation = classify_formation(A, C);
    const Formation& f = out.formation;
    out.cell.row = AC.empty() ? r : std::min(AC.min(), r);
    switch (f.rule) {
        case StartRule::S1: out.cell.col = B.empty() ? s : B.min(); break;
        case StartRule::S2: out.cell.col = r - 1; break;
        case StartRule::S3: out.cell.col = f.dot_row - 1; break;
        case StartRule::S4: out.cell.col = f.block_second - 1; break;
        case StartRule::S5: {
            const int truths = (f.snake == Side::Left) + (f.block_length % 2 == 1) + (f.dot == Side::Left);
            out.cell.col = (truths % 2 == 1 ? f.snake_last : f.block_first) - 1;
            break;
        }
    }
    return out;
}

std::string to_string(DecompositionKind k) {
    switch (k) {
        case DecompositionKind::ViaSAndRm1: return "via-s-and-r-1";
        case DecompositionKind::ViaRm1AndS: return "via-r-1-and-s";
        case DecompositionKind::RowAndColumn: return "row-and-column";
    }
    return "?";
}

Decomposition::Decomposition(const Diagram& d, Cell corner, Cell z, DecompositionKind kind)
    : d_(&d), corner_(corner), z_(z), kind_(kind) {
    const int r = corner.row, s = corner.col, R = r - 1;
    if (!d.contains(z)) throw std::invalid_argument("cell " + to_string(z) + " outside diagram");
    if (z.col >= s) throw std::invalid_argument("decomposition needs a column left of the corner");
    if (kind == DecompositionKind::RowAndColumn) {
        if (z.col <= R) throw std::invalid_argument("row-and-column split needs r-1 < j < s");
        owners_[0] = {z.row, s};
        owners_[1] = {r, z.col};
        return;
    }
    if (z.col >= R) throw std::invalid_argument("column decompositions need j < r-1");
    if (kind == DecompositionKind::ViaSAndRm1) {
        owners_[0] = {z.row, s};
        owners_[1] = {z.col + 1, R};
    } else {
        owners_[0] = {z.row, R};
        owners_[1] = {z.col + 1, s};
    }
}

HookPiece Decomposition::forward(Cell label) const {
    if (!d_->in_punctured_hook(z_, label))
        throw std::invalid_argument(to_string(label) + " not in the punctured hook of " + to_string(z_));
    if (kind_ == DecompositionKind::RowAndColumn) {
        SplitCell sc = row_column_split(z_, corner_, label);
        return {sc.part, sc.cell};
    }
    const int i = z_.row, j = z_.col, r = corner_.row, s = corner_.col, R = r - 1;
    const int a = label.row, b = label.col;
    if (kind_ == DecompositionKind::ViaSAndRm1) {
        if (a == i) {
            if (b > s) return {0, {i, b}};
            if (b >= r) return {1, {r, b}};
            if (b == R) return {0, {r, s}};
            return {1, {b + 1, R}};
        }
        if (b == j) return {0, {a, s}};
        // broken row j+1
        if (b < R) return {0, {b + 1, s}};
        if (b == R) return {0, {j + 1, s}};
        return {1, {j + 1, b}};
    }
    if (a == i) {
        if (b >= r) return {0, {i, b}};
        if (b == R) return {1, {r, s}};
        return {0, {b + 1, R}};
    }
    if (b == j) return {0, {a, R}};
    if (b > s) return {1, {j + 1, b}};
    if (b >= r) return {0, {r, b}};
    if (b == R) return {0, {j + 1, R}};
    return {1, {b + 1, s}};
}

std::optional<Cell> Decomposition::backward(HookPiece piece) const {
    if (piece.part != 0 && piece.part != 1) return std::nullopt;
    if (kind_ == DecompositionKind::RowAndColumn) return row_column_join(*d_, z_, corner_, {piece.part, piece.cell});
    const int i = z_.row, j = z_.col, r = corner_.row, s = corner_.col, R = r - 1;
    const int a = piece.cell.row, b = piece.cell.col;
    std::optional<Cell> out;
    if (kind_ == DecompositionKind::ViaSAndRm1) {
        if (piece.part == 0) {
            if (a == i && b > s)
                out = Cell{i, b};
            else if (b == s && a <= j)
                out = Cell{a, j};
            else if (b == s && a == j + 1)
                out = Cell{j + 1, R};
            else if (b == s && a >= j + 2 && a <= R)
                out = Cell{j + 1, a - 1};
            else if (a == r && b == s)
                out = Cell{i, R};
        } else {
            if (a == r && b >= r && b <= s)
                out = Cell{i, b};
            else if (b == R && a >= j + 2 && a <= R)
                out = Cell{i, a - 1};
            else if (a == j + 1 && b >= r)
                out = Cell{j + 1, b};
        }
    } else {
        if (piece.part == 0) {
            if (a == i && b >= r)
                out = Cell{i, b};
            else if (b == R && a <= j)
                out = Cell{a, j};
            else if (b == R && a == j + 1)
                out = Cell{j + 1, R};
            else if (b == R && a >= j + 2 && a <= R)
                out = Cell{i, a - 1};
            else if (a == r && b >= r && b <= s)
                out = Cell{j + 1, b};
        } else {
            if (a == r && b == s)
                out = Cell{i, R};
            else if (a == j + 1 && b > s)
                out = Cell{j + 1, b};
            else if (b == s && a >= j + 2 && a <= R)
                out = Cell{j + 1, a - 1};
        }
    }
    if (!out || !d_->in_punctured_hook(z_, *out) || forward(*out) != piece) return std::nullopt;
    return out;
}

namespace {

struct Snake {
    const Diagram& d;
    Cell corner;
    int r, s, R;

    Snake(const Diagram& dd, Cell c) : d(dd), corner(c), r(c.row), s(c.col), R(c.row - 1) {}

    Cell get(const Labels& g, Cell z) const { return d.cell(g[static_cast<std::size_t>(d.index(z))]); }
    void put(Labels& g, Cell z, Cell v) const { g[static_cast<std::size_t>(d.index(z))] = d.index(v); }
    bool dot(const Labels& g, Cell z) const { return get(g, z) == z; }

    // X^(a): the part of the punctured hook of (a,r-1) matched with the punctured hook of (a,s).
    bool in_x(Cell l, int a) const {
        if (l.row == a && l.col > s) return true;
        if (l.col == R && l.row > a && l.row <= R) return true;
        return l == Cell{r, s};
    }
    Cell iota(Cell l, int a) const {
        if (l.row == a || l == Cell{r, s}) return l;
        return {l.row, s};
    }
    Cell iota_inv(Cell l, int a) const {
        if (l.row == a || l == Cell{r, s}) return l;
        return {l.row, R};
    }
    static Cell transport(Cell l, int a, int b) { return l.row == a ? Cell{b, l.col} : l; }

    // index of the pivot, or -1 if the pattern does not match
    int pivot(const Labels& g, const std::vector<int>& rows, bool left) const {
        int piv = -1;
        for (std::size_t t = 0; t < rows.size(); ++t) {
            const bool ds = dot(g, {rows[t], s}), dr = dot(g, {rows[t], R});
            if (ds && dr) {
                if (piv >= 0) return -1;
                piv = static_cast<int>(t);
            }
        }
        if (piv < 0) return -1;
        for (std::size_t t = 0; t < rows.size(); ++t) {
            if (static_cast<int>(t) == piv) continue;
            const bool ds = dot(g, {rows[t], s}), dr = dot(g, {rows[t], R});
            const bool before = static_cast<int>(t) < piv;
            const bool want_s = left ? before : !before;
            if (ds != want_s || dr == want_s) return -1;
        }
        return piv;
    }
};

}  // namespace

bool in_left_snakes(const Diagram& d, Cell corner, const Labels& g, IndexSet I) {
    return Snake(d, corner).pivot(g, I.to_vector(), true) >= 0;
}

bool in_right_snakes(const Diagram& d, Cell corner, const Labels& g, IndexSet I) {
    return Snake(d, corner).pivot(g, I.to_vector(), false) >= 0;
}

Labels flip_snake(const Diagram& d, Cell corner, const Labels& g, IndexSet I) {
    if (I.size() <= 1) return g;
    const Snake sn(d, corner);
    const auto rows = I.to_vector();
    const int m = static_cast<int>(rows.size());
    const int k = sn.pivot(g, rows, true);
    if (k < 0) throw std::invalid_argument("arrangement is not a left snake on the given rows");
    Labels out = g;
    const int R = sn.R, s = sn.s;
    int p = 0;
    while (p < k && sn.in_x(sn.get(out, {rows[p], R}), rows[p])) {
        const int a = rows[p];
        sn.put(out, {a, s}, sn.iota(sn.get(out, {a, R}), a));
        sn.put(out, {a, R}, {a, R});
        ++p;
    }
    if (p < k) {
        const int a = rows[p], b = rows[k];
        const Cell x = sn.get(out, {a, R});
        sn.put(out, {a, R}, {a, R});
        sn.put(out, {b, R}, Snake::transport(x, a, b));
    }
    for (int t = k + 1; t < m; ++t) {
        const int a = rows[t];
        sn.put(out, {a, R}, sn.iota_inv(sn.get(out, {a, s}), a));
        sn.put(out, {a, s}, {a, s});
    }
    return out;
}

Labels flip_snake_inverse(const Diagram& d, Cell corner, const Labels& g, IndexSet I) {
    if (I.size() <= 1) return g;
    const Snake sn(d, corner);
    const auto rows = I.to_vector();
    const int m = static_cast<int>(rows.size());
    const int p = sn.pivot(g, rows, false);
    if (p < 0) throw std::invalid_argument("arrangement is not a right snake on the given rows");
    Labels out = g;
    const int R = sn.R, s = sn.s;
    for (int t = 0; t < p; ++t) {
        const int a = rows[t];
        sn.put(out, {a, R}, sn.iota_inv(sn.get(out, {a, s}), a));
        sn.put(out, {a, s}, {a, s});
    }
    int q = -1;
    for (int t = p + 1; t < m; ++t)
        if (!sn.in_x(sn.get(out, {rows[t], R}), rows[t])) q = t;
    int from = p + 1;
    if (q >= 0) {
        const int a = rows[p], b = rows[q];
        sn.put(out, {a, R}, Snake::transport(sn.get(out, {b, R}), b, a));
        sn.put(out, {b, R}, {b, R});
        from = q + 1;
    }
    for (int t = from; t < m; ++t) {
        const int a = rows[t];
        sn.put(out, {a, s}, sn.iota(sn.get(out, {a, R}), a));
        sn.put(out, {a, R}, {a, R});
    }
    return out;
}

nlohmann::json EraseTrace::to_json() const {
    nlohmann::json j = {{"start", hooklab::to_json(start)}, {"formation", formation.to_json()}, {"flipped", flipped}};
    if (decomposition) j["decomposition"] = to_string(*decomposition);
    if (target) j["erased"] = hooklab::to_json(*target);
    return j;
}

ShiftedMaps::ShiftedMaps(std::shared_ptr<const Diagram> d, std::shared_ptr<const HookSystem> h, Cell corner)
    : d_(std::move(d)), h_(std::move(h)), corner_(corner), c_(d_->index(corner)) {
    if (!d_->shifted()) throw std::invalid_argument("shifted maps need a shifted diagram");
    if (!d_->is_corner(corner)) throw std::invalid_argument(to_string(corner) + " is not a corner");
}

int ShiftedMaps::start(const Labels& g) const {
    DotSets ds = dot_sets(*d_, corner_, g);
    return d_->index(start_square(ds.A, ds.B, ds.C, corner_).cell);
}

EraseTrace ShiftedMaps::erase_traced(const Labels& g) const {
    const Diagram& d = *d_;
    DotSets ds = dot_sets(d, corner_, g);
    const StartSquare st = start_square(ds.A, ds.B, ds.C, corner_);
    EraseTrace tr{g, st.cell, st.formation, std::nullopt, std::nullopt, false};
    if (ds.count() == 0) return tr;
    const int r = corner_.row, s = corner_.col, R = r - 1;
    const int i = st.cell.row, j = st.cell.col;
    const Snake sn(d, corner_);
    Labels& out = tr.result;
    auto s_of = [&](IndexSet A, IndexSet B, IndexSet C) { return start_square(A, B, C, corner_).cell; };
    const StartRule rule = st.formation.rule;

    if (rule == StartRule::S2) {
        tr.target = Cell{i, R};
        sn.put(out, {i, R}, s_of(ds.A, ds.B, ds.C.without(i)));
        return tr;
    }
    if (rule == StartRule::S1 && (ds.A.empty() || ds.B.empty())) {
        if (ds.B.empty()) {
            tr.target = Cell{i, s};
            sn.put(out, {i, s}, s_of(ds.A.without(i), ds.B, ds.C));
        } else {
            tr.target = Cell{r, j};
            sn.put(out, {r, j}, s_of(ds.A, ds.B.without(j), ds.C));
        }
        return tr;
    }
    const Cell label = sn.get(g, st.cell);
    if (rule == StartRule::S1) {
        Decomposition dec(d, corner_, st.cell, DecompositionKind::RowAndColumn);
        tr.decomposition = DecompositionKind::RowAndColumn;
        HookPiece piece = dec.forward(label);
        IndexSet A = ds.A, B = ds.B;
        tr.target = dec.owner(piece.part);
        sn.put(out, *tr.target, piece.cell);
        if (piece.part == 0)
            A.erase(i);
        else
            B.erase(j);
        sn.put(out, st.cell, s_of(A, B, ds.C));
        return tr;
    }

    bool first = false;
    const Formation& f = st.formation;
    if (rule == StartRule::S3) {
        first = f.stick == Side::Right;
    } else if (rule == StartRule::S4) {
        const bool even = f.block_length % 2 == 0;
        first = even ? f.dot != Side::Left : f.dot == Side::Left;
    } else {
        first = f.snake == Side::Left;
    }
    const DecompositionKind kind = first ? DecompositionKind::ViaSAndRm1 : DecompositionKind::ViaRm1AndS;
    tr.decomposition = kind;
    Decomposition dec(d, corner_, st.cell, kind);
    const HookPiece piece = dec.forward(label);
    const Cell tgt = dec.owner(piece.part);
    tr.target = tgt;
    sn.put(out, tgt, piece.cell);
    DotSets ds2 = dot_sets(d, corner_, out);
    Cell ns = s_of(ds2.A, ds2.B, ds2.C);
    if (!d.in_punctured_hook(st.cell, ns)) {
        if (rule != StartRule::S5 || tgt.row != j + 1)
            throw std::logic_error("new start left the punctured hook outside the snake case");
        const IndexSet I = (ds.A | ds.C).up_to(j);
        Labels flipped = first ? flip_snake(d, corner_, g, I) : flip_snake_inverse(d, corner_, g, I);
        sn.put(flipped, tgt, piece.cell);
        ds2 = dot_sets(d, corner_, flipped);
        ns = s_of(ds2.A, ds2.B, ds2.C);
        if (!d.in_punctured_hook(st.cell, ns)) throw std::logic_error("snake flip did not restore the start");
        out = std::move(flipped);
        tr.flipped = true;
    }
    sn.put(out, st.cell, ns);
    return tr;
}

std::vector<Labels> ShiftedMaps::preimages(const Labels& gp, int zi) const {
    std::vector<Labels> out;
    const Diagram& d = *d_;
    if (zi < 0 || zi >= d.size() || d.is_corner_index(zi)) return out;
    const LabelDomains dom = domains();
    std::set<Labels> seen;
    auto consider = [&](Labels g) {
        if (!seen.insert(g).second) return;
        if (labels_valid(dom, g) && dot_count(g) == dot_count(gp) + 1 && start(g) == zi && erase(g) == gp)
            out.push_back(std::move(g));
    };
    const Cell z = d.cell(zi);
    const int r = corner_.row, s = corner_.col, R = r - 1;
    if (z.row == r || z.col == R || z.col == s) {
        Labels g = gp;
        g[static_cast<std::size_t>(zi)] = zi;
        consider(std::move(g));
        return out;
    }
    if (z.col > s) return out;
    std::vector<DecompositionKind> kinds;
    if (z.col < R)
        kinds = {DecompositionKind::ViaSAndRm1, DecompositionKind::ViaRm1AndS};
    else
        kinds = {DecompositionKind::RowAndColumn};
    for (DecompositionKind kind : kinds) {
        Decomposition dec(d, corner_, z, kind);
        for (int part = 0; part < 2; ++part) {
            const int t = d.index(dec.owner(part));
            const int cur = gp[static_cast<std::size_t>(t)];
            if (cur == t) continue;
            auto l = dec.backward({part, d.cell(cur)});
            if (!l) continue;
            Labels g0 = gp;
            g0[static_cast<std::size_t>(t)] = t;
            g0[static_cast<std::size_t>(zi)] = d.index(*l);
            if (kind != DecompositionKind::RowAndColumn) {
                DotSets ds = dot_sets(d, corner_, g0);
                const IndexSet I = (ds.A | ds.C).up_to(z.col);
                if (I.size() >= 2) {
                    if (in_right_snakes(d, corner_, g0, I)) consider(flip_snake_inverse(d, corner_, g0, I));
                    if (in_left_snakes(d, corner_, g0, I)) consider(flip_snake(d, corner_, g0, I));
                }
            }
            consider(std::move(g0));
        }
    }
    return out;
}

GArrangement erase_dot(const Diagram& d, const GArrangement& g) {
    auto dp = std::make_shared<const Diagram>(d);
    ShiftedMaps m(dp, std::make_shared<const HookSystem>(HookSystem::from_diagram(d)), g.corner);
    return {g.corner, m.erase(g.labels)};
}

}  // namespace hooklab
