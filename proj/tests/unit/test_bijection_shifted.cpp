#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "hooklab/bijection_shifted.hpp"
#include "hooklab/diagram_bijection.hpp"

using namespace hooklab;

namespace {

std::shared_ptr<const Diagram> shifted(std::vector<int> parts) {
    return std::make_shared<const Diagram>(Partition(std::move(parts)), true);
}

// Every subset of rows 1..r-1.
std::vector<IndexSet> row_sets(int r) {
    std::vector<IndexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (r - 1)); ++m) out.emplace_back(m << 1);
    return out;
}

// Second reading of the snake rule: the explicit case list. Returns the
// column, or nullopt when the columns do not start with a snake or form a
// right snake.
std::optional<int> snake_rule_by_cases(IndexSet A, IndexSet C, int* matches) {
    enum T { a, c, b };
    std::vector<std::pair<int, T>> t;
    for (int i : (A | C).to_vector()) t.push_back({i, A.contains(i) && C.contains(i) ? b : (A.contains(i) ? a : c)});
    if (A.empty() || C.empty()) return std::nullopt;
    std::size_t p = 0;
    bool left = false;
    if (t[0].second == b) {
        if (t.size() == 1 || t[1].second == b) return std::nullopt;  // lone shared row or a block
        left = t[1].second == c;
        p = 1;
    } else {
        const T stick = t[0].second;
        while (p < t.size() && t[p].second == stick) ++p;
        if (t[p].second != b) return std::nullopt;  // stick-dot
        left = stick == a;
        ++p;
    }
    const T tail = left ? c : a;
    while (p < t.size() && t[p].second == tail) ++p;
    const int last_snake_row = t[p - 1].first;
    std::size_t q = p;
    while (q < t.size() && t[q].second == b) ++q;
    const int blen = static_cast<int>(q - p);
    const int first_block_row = blen ? t[p].first : 0;
    const bool dot = q < t.size();
    const bool right_dot = dot && t[q].second == a;
    const bool left_dot = dot && t[q].second == c;
    const bool even = blen % 2 == 0;
    const bool LS = left, RS = !left;

    if (RS && blen == 0 && !dot) return std::nullopt;  // forms a right snake

    int n = 0;
    std::optional<int> row;
    auto when = [&](bool cond, int k) {
        if (!cond) return;
        ++n;
        row = k;
    };
    // last snake row
    when(LS && blen == 0 && !dot, last_snake_row);
    when(LS && blen > 0 && even && !dot, last_snake_row);
    when(RS && !even && !dot, last_snake_row);
    when(blen == 0 && dot, last_snake_row);
    when(LS && blen > 0 && even && right_dot, last_snake_row);
    when(LS && !even && left_dot, last_snake_row);
    when(RS && blen > 0 && even && left_dot, last_snake_row);
    when(RS && !even && right_dot, last_snake_row);
    // first block row
    when(LS && !even && !dot, first_block_row);
    when(RS && blen > 0 && even && !dot, first_block_row);
    when(LS && blen > 0 && even && left_dot, first_block_row);
    when(LS && !even && right_dot, first_block_row);
    when(RS && blen > 0 && even && right_dot, first_block_row);
    when(RS && !even && left_dot, first_block_row);
    *matches = n;
    return *row - 1;
}

// Case list for columns that open with a stick: erasing row j+1 keeps the
// new start in the punctured hook exactly for these token patterns
// (stick side, block parity, side of the following dot).
std::optional<bool> flip_free_by_cases(IndexSet A, IndexSet C) {
    std::vector<char> t;
    for (int i : (A | C).to_vector()) t.push_back(A.contains(i) && C.contains(i) ? 'b' : (A.contains(i) ? 'a' : 'c'));
    if (t.empty() || t[0] == 'b') return std::nullopt;
    const char stick = t[0];
    std::size_t p = 0;
    while (p < t.size() && t[p] == stick) ++p;
    std::size_t q = p;
    while (q < t.size() && t[q] == 'b') ++q;
    const bool left = stick == 'c', even = (q - p) % 2 == 0;
    const char dot = q < t.size() ? t[q] : 0;
    if (dot == 0) return left == even;
    const bool left_dot = dot == 'c';
    return left ? (even ? !left_dot : left_dot) : (even ? left_dot : !left_dot);
}

}  // namespace

TEST(StartSquare, Examples) {
    EXPECT_EQ(start_square({}, {}, {}, {5, 7}).cell, (Cell{5, 7}));
    EXPECT_EQ(start_square(IndexSet::of({2}), IndexSet::of({4}), {}, {5, 7}).cell, (Cell{2, 4}));
    const StartSquare ls = start_square({}, {}, IndexSet::of({3}), {5, 8});
    EXPECT_EQ(ls.cell, (Cell{3, 4}));
    EXPECT_EQ(ls.formation.rule, StartRule::S2);
}

TEST(StartSquare, SetFormOfStickDotRule) {
    for (int r = 2; r <= 9; ++r) {
        const Cell corner{r, r + 3};
        for (IndexSet A : row_sets(r))
            for (IndexSet C : row_sets(r)) {
                std::optional<int> j;
                if (!C.empty()) {
                    const IndexSet head = A.up_to(C.min());
                    if (!head.empty() && head.max() < C.min()) j = C.min() - 1;
                }
                if (!A.empty()) {
                    const IndexSet head = C.up_to(A.min());
                    if (!head.empty() && head.max() < A.min()) {
                        ASSERT_FALSE(j.has_value());
                        j = A.min() - 1;
                    }
                }
                const StartSquare st = start_square(A, {}, C, corner);
                ASSERT_EQ(j.has_value(), st.formation.rule == StartRule::S3);
                if (j) ASSERT_EQ(st.cell.col, *j);
            }
    }
}

TEST(StartSquare, SnakeRuleCaseListAgreesWithParity) {
    std::uint64_t compared = 0;
    for (int r = 2; r <= 9; ++r) {
        const Cell corner{r, r + 3};
        for (IndexSet A : row_sets(r))
            for (IndexSet C : row_sets(r)) {
                int matches = 0;
                const auto j = snake_rule_by_cases(A, C, &matches);
                const StartSquare st = start_square(A, {}, C, corner);
                ASSERT_EQ(j.has_value(), st.formation.rule == StartRule::S5);
                if (!j) continue;
                ASSERT_EQ(matches, 1);
                ASSERT_EQ(st.cell.col, *j);
                ++compared;
            }
    }
    EXPECT_GT(compared, 1000U);
}

TEST(StartSquare, FlipCaseListOnStickFirstColumns) {
    int checked = 0;
    for (int r = 3; r <= 9; ++r) {
        const int s = r + 1;
        std::vector<int> parts;
        for (int i = 1; i <= r; ++i) parts.push_back(s - i + 1);
        const Diagram d{Partition(parts), true};
        const Cell corner{r, s};
        for (IndexSet A : row_sets(r))
            for (IndexSet C : row_sets(r)) {
                const StartSquare st = start_square(A, {}, C, corner);
                if (st.formation.rule != StartRule::S5) continue;
                const auto expected = flip_free_by_cases(A, C);
                if (!expected) continue;
                const int j = st.cell.col;
                IndexSet A2 = A, C2 = C;
                if (st.formation.snake == Side::Left) C2.erase(j + 1);
                else A2.erase(j + 1);
                const Cell next = start_square(A2, {}, C2, corner).cell;
                ASSERT_EQ(d.in_punctured_hook(st.cell, next), *expected) << "A=" << A.bits() << " C=" << C.bits();
                ++checked;
            }
    }
    EXPECT_EQ(checked, 27331);
}

// Frozen fingerprint of s over every (A,B,C) with r <= 6.
TEST(StartSquare, RegressionLockUpTo6) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    for (int r = 2; r <= 6; ++r) {
        const Cell corner{r, r + 3};
        for (IndexSet A : row_sets(r))
            for (IndexSet C : row_sets(r))
                for (std::uint64_t bm = 0; bm < 8; ++bm) {
                    const IndexSet B(bm << r);
                    const Cell z = start_square(A, B, C, corner).cell;
                    mix(static_cast<std::uint64_t>(z.row));
                    mix(static_cast<std::uint64_t>(z.col));
                }
    }
    EXPECT_EQ(h, 2433814143549210403ULL) << "fingerprint " << h;
}

TEST(Decomposition, SizesOn87532) {
    const Diagram d(Partition({8, 7, 5, 3, 2}), true);
    const Cell c{5, 6}, z{1, 2};
    const int hz = d.hook_length(z);
    EXPECT_EQ(hz - 1, (d.hook_length({1, 6}) - 1) + (d.hook_length({3, 4}) - 1));
    EXPECT_EQ(hz - 1, (d.hook_length({1, 4}) - 1) + (d.hook_length({3, 6}) - 1));
    for (auto kind : {DecompositionKind::ViaSAndRm1, DecompositionKind::ViaRm1AndS}) {
        const Decomposition dec(d, c, z, kind);
        std::set<std::pair<int, Cell>> img;
        for (Cell w : d.punctured_hook_cells(z)) {
            const HookPiece p = dec.forward(w);
            ASSERT_TRUE(d.in_punctured_hook(dec.owner(p.part), p.cell));
            ASSERT_EQ(dec.backward(p), w);
            ASSERT_TRUE(img.insert({p.part, p.cell}).second);
        }
    }
}

TEST(Decomposition, RoundTripEverywhere) {
    for (auto parts : {std::vector<int>{8, 7, 5, 3, 2}, {6, 5, 3, 2, 1}, {7, 4, 3, 1}}) {
        const Diagram d(Partition(parts), true);
        for (Cell c : d.corners()) {
            const int R = c.row - 1;
            for (Cell z : d.cells()) {
                if (z.row >= c.row || z.col >= c.col) continue;
                std::vector<DecompositionKind> kinds;
                if (z.col < R) kinds = {DecompositionKind::ViaSAndRm1, DecompositionKind::ViaRm1AndS};
                else if (z.col > R) kinds = {DecompositionKind::RowAndColumn};
                for (auto kind : kinds) {
                    const Decomposition dec(d, c, z, kind);
                    std::set<std::pair<int, Cell>> img;
                    for (Cell w : d.punctured_hook_cells(z)) {
                        const HookPiece p = dec.forward(w);
                        ASSERT_EQ(dec.backward(p), w);
                        ASSERT_TRUE(img.insert({p.part, p.cell}).second);
                    }
                    const std::size_t total = d.punctured_hook_cells(dec.owner(0)).size() +
                                              d.punctured_hook_cells(dec.owner(1)).size();
                    ASSERT_EQ(img.size(), total);
                }
            }
        }
    }
}

TEST(Decomposition, Errors) {
    const Diagram d(Partition({8, 7, 5, 3, 2}), true);
    EXPECT_THROW(Decomposition(d, {5, 6}, {1, 6}, DecompositionKind::ViaSAndRm1), std::invalid_argument);
    EXPECT_THROW(Decomposition(d, {5, 6}, {9, 9}, DecompositionKind::ViaSAndRm1), std::invalid_argument);
}

TEST(SnakeFlip, SmallIndexSetsAreIdentity) {
    const auto d = shifted({4, 3, 1});
    const Cell c{3, 3};
    auto s = enumerate_G(d, c);
    while (s.next()) {
        for (IndexSet I : {IndexSet(), IndexSet::of({1}), IndexSet::of({2})}) {
            ASSERT_EQ(flip_snake(*d, c, s.labels(), I), s.labels());
            ASSERT_EQ(flip_snake_inverse(*d, c, s.labels(), I), s.labels());
        }
    }
}

TEST(SnakeFlip, BijectiveAndLocalOn431) {
    for (auto parts : {std::vector<int>{4, 3, 1}, {5, 3, 1}, {5, 4, 2}}) {
        const auto d = shifted(parts);
        for (Cell c : d->corners()) {
            const int r = c.row, s = c.col;
            for (IndexSet I : row_sets(r)) {
                std::set<Labels> left, right, image;
                auto st = enumerate_G(d, c);
                while (st.next()) {
                    if (in_left_snakes(*d, c, st.labels(), I)) left.insert(st.labels());
                    if (in_right_snakes(*d, c, st.labels(), I)) right.insert(st.labels());
                }
                for (const Labels& g : left) {
                    const Labels f = flip_snake(*d, c, g, I);
                    ASSERT_TRUE(in_right_snakes(*d, c, f, I));
                    ASSERT_EQ(flip_snake_inverse(*d, c, f, I), g);
                    ASSERT_EQ(dot_count(f), dot_count(g));
                    ASSERT_EQ(dot_sets(*d, c, f).B, dot_sets(*d, c, g).B);
                    for (int z = 0; z < d->size(); ++z) {
                        const Cell zc = d->cell(z);
                        const bool support = I.contains(zc.row) && (zc.col == r - 1 || zc.col == s);
                        if (!support) ASSERT_EQ(f[static_cast<std::size_t>(z)], g[static_cast<std::size_t>(z)]);
                    }
                    image.insert(f);
                }
                ASSERT_EQ(image, right);
                for (const Labels& g : right) ASSERT_EQ(flip_snake(*d, c, flip_snake_inverse(*d, c, g, I), I), g);
            }
        }
    }
}

TEST(SnakeFlip, RejectsOutsideDomain) {
    const auto d = shifted({4, 3, 1});
    const Cell c{3, 3};
    auto st = enumerate_G(d, c);
    while (st.next())
        if (!in_left_snakes(*d, c, st.labels(), IndexSet::of({1, 2}))) {
            EXPECT_THROW(flip_snake(*d, c, st.labels(), IndexSet::of({1, 2})), std::invalid_argument);
            return;
        }
    FAIL() << "no arrangement outside the snake set";
}

TEST(ShiftedErase, SingleDotInColumnS) {
    const auto d = shifted({5, 3, 2});
    const DiagramBijection db(*d);
    for (Cell c : d->corners()) {
        auto st = enumerate_G(d, c);
        int seen = 0;
        while (st.next()) {
            const DotSets ds = dot_sets(*d, c, st.labels());
            if (ds.count() != 1 || ds.A.size() != 1) continue;
            const Labels e = db.maps(c).erase(st.labels());
            ASSERT_EQ(d->cell(e[static_cast<std::size_t>(d->index({ds.A.min(), c.col}))]), c);
            ++seen;
        }
        if (c.row > 1) EXPECT_GT(seen, 0);
    }
}

TEST(ShiftedErase, NextStartInPuncturedHook) {
    for (auto parts : {std::vector<int>{4, 3, 1}, {5, 3, 2}, {4, 3, 2, 1}}) {
        const auto d = shifted(parts);
        if (f_space_size(*d) > 3000000) continue;
        const DiagramBijection db(*d);
        for (Cell c : d->corners()) {
            const CornerMaps& m = db.maps(c);
            auto st = enumerate_G(d, c);
            while (st.next()) {
                const Labels& g = st.labels();
                if (dot_count(g) == 0) continue;
                const Labels e = m.erase(g);
                ASSERT_EQ(dot_count(e), dot_count(g) - 1);
                ASSERT_TRUE(d->in_punctured_hook(d->cell(m.start(g)), d->cell(m.start(e))));
                ASSERT_EQ(e[static_cast<std::size_t>(m.start(g))], m.start(e));
            }
        }
    }
}

TEST(ShiftedErase, TraceRecordsTheCase) {
    // smallest shape on which the snake flip is needed
    const auto d = shifted({4, 3, 2, 1});
    const DiagramBijection db(*d);
    const auto& m = dynamic_cast<const ShiftedMaps&>(db.maps({4, 4}));
    auto st = enumerate_G(d, {4, 4});
    int flips = 0;
    while (st.next()) {
        const EraseTrace t = m.erase_traced(st.labels());
        ASSERT_EQ(t.result, m.erase(st.labels()));
        if (t.flipped) {
            ++flips;
            ASSERT_EQ(t.formation.rule, StartRule::S5);
            ASSERT_TRUE(t.to_json().at("flipped").get<bool>());
        }
    }
    EXPECT_EQ(flips, 576);
}

TEST(ShiftedProperties, FlipShapes) {
    for (auto parts : {std::vector<int>{4, 3, 2, 1}, {5, 3, 2, 1}}) {
        const Diagram d(Partition(parts), true);
        const DiagramBijection db(d);
        for (Cell c : d.corners()) {
            const PropertyReport r = verify_properties_exhaustive(db.maps(c), true);
            ASSERT_TRUE(r.pass()) << r.to_json().dump();
        }
        const RoundTripReport rt = roundtrip_exhaustive(db.bijection());
        EXPECT_TRUE(rt.pass()) << rt.to_json().dump();
        EXPECT_EQ(BigInt(rt.distinct_images), f_space_size(d));
    }
}

TEST(ShiftedProperties, ExhaustiveUpTo9) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& l : strict_partitions_of(n)) {
            const Diagram d(l, true);
            const DiagramBijection db(d);
            for (Cell c : d.corners()) {
                const PropertyReport r = verify_properties_exhaustive(db.maps(c), g_space_size(d, c) <= 20000);
                ASSERT_TRUE(r.pass()) << l.to_string() << ' ' << to_string(c) << ' ' << r.to_json().dump();
            }
        }
}

TEST(ShiftedPhi, ZeroDotsAndRoundTrip) {
    const auto d = shifted({3, 2, 1});
    const DiagramBijection db(*d);
    const RoundTripReport r = roundtrip_exhaustive(db.bijection());
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.g_checked, 288U);
    EXPECT_EQ(r.distinct_images, 288U);
    for (Cell c : d->corners()) {
        auto st = enumerate_G(d, c);
        while (st.next()) {
            if (dot_count(st.labels()) != 0) continue;
            const FArrangement f = db.phi(st.current());
            EXPECT_EQ(f.start, c);
            EXPECT_EQ(f.labels, st.labels());
        }
    }
}

// Phi on G with k dots gives a hook walk of length k from s(G) to c.
TEST(ShiftedPhi, HookWalkLength) {
    const auto d = shifted({4, 3, 1});
    const DiagramBijection db(*d);
    for (Cell c : d->corners()) {
        auto st = enumerate_G(d, c);
        while (st.next()) {
            const FArrangement f = db.phi(st.current());
            Cell z = f.start;
            int steps = 0;
            while (!d->is_corner(z)) {
                z = d->cell(f.labels[static_cast<std::size_t>(d->index(z))]);
                ++steps;
            }
            ASSERT_EQ(z, c);
            ASSERT_EQ(steps, dot_count(st.labels()));
            ASSERT_EQ(db.phi_inverse(f).labels, st.labels());
        }
    }
}

TEST(ShiftedPhi, SampledLarge) {
    const Diagram d(Partition({8, 7, 5, 3, 2}), true);
    const DiagramBijection db(d);
    std::mt19937_64 rng(11);
    const RoundTripReport r = roundtrip_sampled(db.bijection(), 2000, rng);
    EXPECT_TRUE(r.pass()) << r.to_json().dump();
    for (Cell c : d.corners()) EXPECT_TRUE(verify_properties_sampled(db.maps(c), 500, rng).pass());
}
