#include "hooklab/arrangements.hpp"

#include <stdexcept>

#include "hooklab/config.hpp"

namespace hooklab {

HookSystem::HookSystem(std::vector<std::vector<int>> hooks, std::vector<std::uint8_t> minimal,
                       std::vector<std::uint8_t> leq_matrix)
    : hooks_(std::move(hooks)), minimal_flag_(std::move(minimal)), leq_(std::move(leq_matrix)) {
    const std::size_t n = hooks_.size();
    if (minimal_flag_.size() != n || leq_.size() != n * n)
        throw std::invalid_argument("inconsistent hook system dimensions");
    member_.assign(n * n, 0);
    for (std::size_t z = 0; z < n; ++z) {
        if (hooks_[z].empty() || hooks_[z].front() != static_cast<int>(z))
            throw std::invalid_argument("hook must start with its owner");
        for (int w : hooks_[z]) member_[idx(static_cast<int>(z), w)] = 1;
        if (minimal_flag_[z]) minimal_.push_back(static_cast<int>(z));
    }
}

HookSystem HookSystem::from_diagram(const Diagram& d) {
    const int n = d.size();
    std::vector<std::vector<int>> hooks(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> minimal(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        hooks[static_cast<std::size_t>(a)] = d.hook(a);
        minimal[static_cast<std::size_t>(a)] = d.is_corner_index(a) ? 1 : 0;
        for (int b = 0; b < n; ++b)
            if (dominates(d.cell(b), d.cell(a)))
                leq[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = 1;
    }
    return HookSystem(std::move(hooks), std::move(minimal), std::move(leq));
}

LabelDomains f_domains(const HookSystem& h) {
    LabelDomains dom(static_cast<std::size_t>(h.size()));
    for (int z = 0; z < h.size(); ++z) {
        if (h.is_minimal(z)) continue;
        const auto& hk = h.hook(z);
        dom[static_cast<std::size_t>(z)].assign(hk.begin() + 1, hk.end());
    }
    return dom;
}

LabelDomains g_domains(const HookSystem& h, int c) {
    if (c < 0 || c >= h.size() || !h.is_minimal(c)) throw std::invalid_argument("not a minimal element");
    LabelDomains dom(static_cast<std::size_t>(h.size()));
    for (int z = 0; z < h.size(); ++z) {
        if (h.is_minimal(z)) continue;
        const auto& hk = h.hook(z);
        if (h.in_hook(z, c))
            dom[static_cast<std::size_t>(z)] = hk;
        else
            dom[static_cast<std::size_t>(z)].assign(hk.begin() + 1, hk.end());
    }
    return dom;
}

BigInt space_size(const LabelDomains& dom) {
    BigInt r = 1;
    for (const auto& d : dom)
        if (!d.empty()) r *= d.size();
    return r;
}

bool labels_valid(const LabelDomains& dom, const Labels& g) {
    if (g.size() != dom.size()) return false;
    for (std::size_t z = 0; z < dom.size(); ++z) {
        if (dom[z].empty()) {
            if (g[z] != kNoLabel) return false;
            continue;
        }
        bool ok = false;
        for (int w : dom[z]) ok = ok || w == g[z];
        if (!ok) return false;
    }
    return true;
}

int dot_count(const Labels& g) {
    int k = 0;
    for (std::size_t z = 0; z < g.size(); ++z) k += g[z] == static_cast<int>(z);
    return k;
}

LabelOdometer::LabelOdometer(LabelDomains domains) : dom_(std::move(domains)) {
    pos_.assign(dom_.size(), 0);
    cur_.assign(dom_.size(), kNoLabel);
    for (std::size_t z = 0; z < dom_.size(); ++z)
        if (!dom_[z].empty()) active_.push_back(z);
}

bool LabelOdometer::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        for (std::size_t z : active_) cur_[z] = dom_[z][0];
        return true;
    }
    for (std::size_t k = active_.size(); k-- > 0;) {
        const std::size_t z = active_[k];
        if (++pos_[z] < dom_[z].size()) {
            cur_[z] = dom_[z][pos_[z]];
            return true;
        }
        pos_[z] = 0;
        cur_[z] = dom_[z][0];
    }
    done_ = true;
    return false;
}

Labels sample_labels(const LabelDomains& dom, std::mt19937_64& rng) {
    Labels g(dom.size(), kNoLabel);
    for (std::size_t z = 0; z < dom.size(); ++z) {
        if (dom[z].empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, dom[z].size() - 1);
        g[z] = dom[z][pick(rng)];
    }
    return g;
}

IndexSet IndexSet::of(std::initializer_list<int> xs) {
    IndexSet s;
    for (int x : xs) s.insert(x);
    return s;
}

void IndexSet::insert(int i) {
    if (i < 0 || i >= 64) throw std::out_of_range("index set supports 0..63");
    bits_ |= std::uint64_t{1} << i;
}

std::vector<int> IndexSet::to_vector() const {
    std::vector<int> v;
    for (std::uint64_t b = bits_; b; b &= b - 1) v.push_back(std::countr_zero(b));
    return v;
}

IndexSet IndexSet::up_to(int k) const {
    if (k < 0) return IndexSet();
    if (k >= 63) return *this;
    return IndexSet(bits_ & ((std::uint64_t{2} << k) - 1));
}

namespace {

nlohmann::ordered_json labels_json(const Diagram& d, const Labels& g) {
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (int k = 0; k < d.size(); ++k) {
        if (g[static_cast<std::size_t>(k)] == kNoLabel) continue;
        Cell z = d.cell(k), w = d.cell(g[static_cast<std::size_t>(k)]);
        m[std::to_string(z.row) + "," + std::to_string(z.col)] = {w.row, w.col};
    }
    return m;
}

void check_bound(const BigInt& size) {
    if (size > max_enumeration())
        throw std::invalid_argument("arrangement space of size " + size.str() +
                                    " exceeds the enumeration bound; use sampling");
}

}  // namespace

nlohmann::ordered_json to_json(const Diagram& d, const FArrangement& f) {
    nlohmann::ordered_json j;
    j["start"] = {f.start.row, f.start.col};
    j["labels"] = labels_json(d, f.labels);
    return j;
}

nlohmann::ordered_json to_json(const Diagram& d, const GArrangement& g) {
    nlohmann::ordered_json j;
    j["corner"] = {g.corner.row, g.corner.col};
    j["labels"] = labels_json(d, g.labels);
    return j;
}

LabelDomains f_domains(const Diagram& d) { return f_domains(HookSystem::from_diagram(d)); }

LabelDomains g_domains(const Diagram& d, Cell corner) {
    if (!d.is_corner(corner)) throw std::invalid_argument(to_string(corner) + " is not a corner");
    return g_domains(HookSystem::from_diagram(d), d.index(corner));
}

BigInt f_space_size(const Diagram& d) { return space_size(f_domains(d)) * d.size(); }
BigInt g_space_size(const Diagram& d, Cell corner) { return space_size(g_domains(d, corner)); }

FStream::FStream(std::shared_ptr<const Diagram> d) : d_(std::move(d)), dom_(f_domains(*d_)), od_(dom_) {}

bool FStream::next() {
    while (start_ < d_->size()) {
        if (od_.next()) return true;
        if (++start_ < d_->size()) od_ = LabelOdometer(dom_);
    }
    return false;
}

FArrangement FStream::current() const { return {d_->cell(start_), od_.current()}; }

GStream::GStream(std::shared_ptr<const Diagram> d, Cell corner)
    : d_(std::move(d)), corner_(corner), od_(g_domains(*d_, corner)) {}

FStream enumerate_F(std::shared_ptr<const Diagram> d) {
    check_bound(f_space_size(*d));
    return FStream(std::move(d));
}

GStream enumerate_G(std::shared_ptr<const Diagram> d, Cell corner) {
    check_bound(g_space_size(*d, corner));
    return GStream(std::move(d), corner);
}

DotSets dot_sets(const Diagram& d, Cell corner, const Labels& g) {
    DotSets ds;
    const int r = corner.row, s = corner.col;
    auto is_dot = [&](Cell z) {
        const int k = d.index(z);
        return k >= 0 && !d.is_corner_index(k) && g[static_cast<std::size_t>(k)] == k;
    };
    for (int i = 1; i < r; ++i) {
        if (is_dot({i, s})) ds.A.insert(i);
        if (d.shifted() && is_dot({i, r - 1})) ds.C.insert(i);
    }
    // the shaded row: columns r..s-1 (shifted) or 1..s-1 (ordinary)
    for (int j = d.row_start(r); j < s; ++j)
        if (is_dot({r, j})) ds.B.insert(j);
    return ds;
}

std::string to_string(FormationKind k) {
    switch (k) {
        case FormationKind::Empty: return "empty";
        case FormationKind::RightStick: return "right-stick";
        case FormationKind::LeftStick: return "left-stick";
        case FormationKind::RightSnake: return "right-snake";
        case FormationKind::LeftSnake: return "left-snake";
        case FormationKind::StickDot: return "stick-dot";
        case FormationKind::Block: return "block";
        case FormationKind::BlockDot: return "block-dot";
        case FormationKind::SnakeDot: return "snake-dot";
        case FormationKind::SnakeBlock: return "snake-block";
        case FormationKind::SnakeBlockDot: return "snake-block-dot";
    }
    return "?";
}

std::string to_string(Side s) {
    switch (s) {
        case Side::None: return "none";
        case Side::Left: return "left";
        case Side::Right: return "right";
    }
    return "?";
}

std::string to_string(StartRule r) { return "S" + std::to_string(static_cast<int>(r) + 1); }

nlohmann::json Formation::to_json() const {
    nlohmann::json j = {{"kind", to_string(kind)}, {"rule", to_string(rule)}};
    if (stick != Side::None) j["stick"] = to_string(stick);
    if (snake != Side::None) {
        j["snake"] = to_string(snake);
        j["snake_rows"] = {snake_first, snake_last};
    }
    if (block_length) {
        j["block_first"] = block_first;
        j["block_length"] = block_length;
    }
    if (dot != Side::None) {
        j["dot"] = to_string(dot);
        j["dot_row"] = dot_row;
    }
    return j;
}

Formation classify_formation(IndexSet A, IndexSet C) {
    Formation f;
    if (C.empty()) {
        f.kind = A.empty() ? FormationKind::Empty : FormationKind::RightStick;
        f.rule = StartRule::S1;
        return f;
    }
    if (A.empty()) {
        f.kind = FormationKind::LeftStick;
        f.rule = StartRule::S2;
        return f;
    }
    enum Tok { TA, TC, TB };
    struct Row {
        int row;
        Tok tok;
    };
    std::vector<Row> t;
    for (int i : (A | C).to_vector()) t.push_back({i, A.contains(i) && C.contains(i) ? TB : (A.contains(i) ? TA : TC)});
    const std::size_t n = t.size();
    auto side_of = [](Tok x) { return x == TA ? Side::Right : Side::Left; };

    std::size_t p = 0;
    if (t[0].tok != TB) {
        const Tok stick = t[0].tok;
        while (p < n && t[p].tok == stick) ++p;
        // p < n: the other column is non-empty
        if (t[p].tok != TB) {
            f.kind = FormationKind::StickDot;
            f.rule = StartRule::S3;
            f.stick = side_of(stick);
            f.dot = side_of(t[p].tok);
            f.dot_row = t[p].row;
            return f;
        }
        // stick A^a then B is a left snake, stick C^c then B a right snake
        f.snake = stick == TA ? Side::Left : Side::Right;
        const Tok tail = stick == TA ? TC : TA;
        ++p;
        while (p < n && t[p].tok == tail) ++p;
    } else {
        if (n == 1) {
            f.kind = FormationKind::RightSnake;  // tie rule for a lone B row
            f.rule = StartRule::S2;
            f.snake = Side::Right;
            f.snake_first = f.snake_last = t[0].row;
            return f;
        }
        if (t[1].tok == TB) {
            std::size_t b = 0;
            while (b < n && t[b].tok == TB) ++b;
            f.kind = b < n ? FormationKind::BlockDot : FormationKind::Block;
            f.rule = StartRule::S4;
            f.block_first = t[0].row;
            f.block_second = t[1].row;
            f.block_length = static_cast<int>(b);
            if (b < n) {
                f.dot = side_of(t[b].tok);
                f.dot_row = t[b].row;
            }
            return f;
        }
        f.snake = t[1].tok == TA ? Side::Right : Side::Left;
        const Tok tail = t[1].tok;
        p = 1;
        while (p < n && t[p].tok == tail) ++p;
    }
    f.snake_first = t[0].row;
    f.snake_last = t[p - 1].row;
    if (p == n) {
        f.kind = f.snake == Side::Right ? FormationKind::RightSnake : FormationKind::LeftSnake;
        f.rule = f.snake == Side::Right ? StartRule::S2 : StartRule::S5;
        return f;
    }
    std::size_t q = p;
    while (q < n && t[q].tok == TB) ++q;
    f.block_length = static_cast<int>(q - p);
    if (f.block_length) {
        f.block_first = t[p].row;
        if (f.block_length > 1) f.block_second = t[p + 1].row;
    }
    if (q < n) {
        f.dot = side_of(t[q].tok);
        f.dot_row = t[q].row;
    }
    if (f.block_length == 0)
        f.kind = FormationKind::SnakeDot;
    else
        f.kind = q < n ? FormationKind::SnakeBlockDot : FormationKind::SnakeBlock;
    f.rule = StartRule::S5;
    return f;
}

}  // namespace hooklab
