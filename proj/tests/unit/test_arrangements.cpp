#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <set>

#include "hooklab/arrangements.hpp"

using namespace hooklab;

namespace {

std::shared_ptr<const Diagram> diagram(std::vector<int> parts, bool shifted) {
    return std::make_shared<const Diagram>(Partition(std::move(parts)), shifted);
}

// n * prod over non-corners of (h - 1), straight from the hook lengths.
BigInt f_oracle(const Diagram& d) {
    BigInt p = d.size();
    for (Cell z : d.cells())
        if (!d.is_corner(z)) p *= d.hook_length(z) - 1;
    return p;
}

// Corner summand: h for hooks containing c, h - 1 otherwise.
BigInt g_oracle(const Diagram& d, Cell c) {
    BigInt p = 1;
    for (Cell z : d.cells())
        if (!d.is_corner(z)) p *= d.in_hook(z, c) ? d.hook_length(z) : d.hook_length(z) - 1;
    return p;
}

std::uint64_t count_f(std::shared_ptr<const Diagram> d) {
    auto s = enumerate_F(std::move(d));
    std::uint64_t k = 0;
    while (s.next()) ++k;
    return k;
}

std::uint64_t count_g(std::shared_ptr<const Diagram> d, Cell c) {
    auto s = enumerate_G(std::move(d), c);
    std::uint64_t k = 0;
    while (s.next()) ++k;
    return k;
}

}  // namespace

TEST(Spaces, FExamples) {
    EXPECT_EQ(count_f(diagram({2, 1}, true)), 6U);
    EXPECT_EQ(count_f(diagram({3, 2, 1}, true)), 288U);
    auto one = enumerate_F(diagram({1}, true));
    ASSERT_TRUE(one.next());
    EXPECT_EQ(one.start(), (Cell{1, 1}));
    EXPECT_EQ(one.labels(), (Labels{kNoLabel}));
    EXPECT_FALSE(one.next());
}

TEST(Spaces, GExamples) {
    EXPECT_EQ(count_g(diagram({2, 1}, true), {2, 2}), 6U);
    EXPECT_EQ(count_g(diagram({1}, false), {1, 1}), 1U);
    const auto d322 = diagram({3, 2, 2}, false);
    EXPECT_EQ(BigInt(count_g(d322, {1, 3})), g_oracle(*d322, {1, 3}));
    EXPECT_THROW(enumerate_G(d322, {2, 2}), std::invalid_argument);
}

TEST(Spaces, StreamsAreValidAndDuplicateFree) {
    for (auto [parts, shifted] : {std::pair{std::vector<int>{4, 2, 1}, true}, {{3, 2, 2}, false}, {{3, 1}, true}}) {
        const auto d = diagram(parts, shifted);
        const auto fdom = f_domains(*d);
        std::set<std::pair<Cell, Labels>> seen;
        auto fs = enumerate_F(d);
        while (fs.next()) {
            ASSERT_TRUE(labels_valid(fdom, fs.labels()));
            ASSERT_TRUE(seen.insert({fs.start(), fs.labels()}).second);
        }
        EXPECT_EQ(BigInt(seen.size()), f_oracle(*d));
        for (Cell c : d->corners()) {
            std::set<Labels> gs;
            auto g = enumerate_G(d, c);
            const auto dom = g_domains(*d, c);
            while (g.next()) {
                ASSERT_TRUE(labels_valid(dom, g.labels()));
                // a label is the cell itself only when c is in its hook
                for (int z = 0; z < d->size(); ++z) {
                    const int w = g.labels()[static_cast<std::size_t>(z)];
                    if (w == kNoLabel) continue;
                    ASSERT_TRUE(d->in_hook(d->cell(z), d->cell(w)));
                    if (w == z) ASSERT_TRUE(d->in_hook(d->cell(z), c));
                }
                ASSERT_TRUE(gs.insert(g.labels()).second);
            }
            EXPECT_EQ(BigInt(gs.size()), g_oracle(*d, c));
        }
    }
}

TEST(Spaces, SizesMatchOracles) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& l : strict_partitions_of(n)) {
            const Diagram d(l, true);
            ASSERT_EQ(f_space_size(d), f_oracle(d));
            for (Cell c : d.corners()) ASSERT_EQ(g_space_size(d, c), g_oracle(d, c));
        }
}

TEST(Spaces, BranchingByCountingSmall) {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& l : strict_partitions_of(n)) {
            const auto d = std::make_shared<const Diagram>(l, true);
            std::uint64_t g = 0;
            for (Cell c : d->corners()) g += count_g(d, c);
            ASSERT_EQ(g, count_f(d)) << l.to_string();
        }
        for (const auto& l : partitions_of(n)) {
            const auto d = std::make_shared<const Diagram>(l, false);
            std::uint64_t g = 0;
            for (Cell c : d->corners()) g += count_g(d, c);
            ASSERT_EQ(g, count_f(d)) << l.to_string();
        }
    }
}

TEST(Spaces, EnumerationBound) {
    // 8,7,5,3,2 is far beyond the default bound
    EXPECT_THROW(enumerate_F(diagram({8, 7, 5, 3, 2}, true)), std::invalid_argument);
}

TEST(DotSets, Basics) {
    const auto d = diagram({5, 3, 2}, true);
    const Cell c{3, 4};
    auto dom = g_domains(*d, c);
    Labels g(static_cast<std::size_t>(d->size()), kNoLabel);
    for (int z = 0; z < d->size(); ++z)
        if (!dom[static_cast<std::size_t>(z)].empty())
            for (int w : dom[static_cast<std::size_t>(z)])
                if (w != z) {
                    g[static_cast<std::size_t>(z)] = w;
                    break;
                }
    EXPECT_EQ(dot_sets(*d, c, g), DotSets{});

    // single dot in the shaded row at (3,3)
    Labels g2 = g;
    g2[static_cast<std::size_t>(d->index({3, 3}))] = d->index({3, 3});
    const DotSets ds = dot_sets(*d, c, g2);
    EXPECT_EQ(ds.B, IndexSet::of({3}));
    EXPECT_TRUE(ds.A.empty());
    EXPECT_TRUE(ds.C.empty());
    EXPECT_EQ(ds.count(), 1);

    // dots in both shaded columns and the row
    Labels g3 = g2;
    for (Cell z : {Cell{1, 4}, Cell{2, 2}, Cell{2, 4}}) g3[static_cast<std::size_t>(d->index(z))] = d->index(z);
    const DotSets ds3 = dot_sets(*d, c, g3);
    EXPECT_EQ(ds3.A, IndexSet::of({1, 2}));
    EXPECT_EQ(ds3.C, IndexSet::of({2}));
    EXPECT_EQ(ds3.count(), dot_count(g3));
}

TEST(DotSets, InvariantsOverWholeSpaces) {
    for (auto [parts, shifted] : {std::pair{std::vector<int>{4, 3, 1}, true}, {{5, 2, 1}, true}, {{3, 3, 2}, false}}) {
        const auto d = diagram(parts, shifted);
        for (Cell c : d->corners()) {
            const int r = c.row, s = c.col;
            std::map<int, std::uint64_t> by_k;
            std::uint64_t total = 0;
            auto g = enumerate_G(d, c);
            while (g.next()) {
                const DotSets ds = dot_sets(*d, c, g.labels());
                ASSERT_EQ(ds.count(), dot_count(g.labels()));
                for (int i : ds.A.to_vector()) ASSERT_LT(i, r);
                for (int i : ds.C.to_vector()) ASSERT_LT(i, r);
                for (int j : ds.B.to_vector()) {
                    ASSERT_LT(j, s);
                    // never column r-1 in a shifted diagram: (r,r-1) is not a cell
                    if (shifted) ASSERT_GE(j, r);
                }
                if (!shifted) ASSERT_TRUE(ds.C.empty());
                ++by_k[ds.count()];
                ++total;
            }
            std::uint64_t sum = 0;
            for (auto [k, v] : by_k) sum += v;
            EXPECT_EQ(sum, total);
            EXPECT_EQ(BigInt(total), g_oracle(*d, c));
        }
    }
}

TEST(Formation, Examples) {
    EXPECT_EQ(classify_formation(IndexSet::of({2, 4}), {}).kind, FormationKind::RightStick);
    const Formation tie = classify_formation(IndexSet::of({3}), IndexSet::of({3}));
    EXPECT_EQ(tie.kind, FormationKind::RightSnake);
    EXPECT_EQ(tie.rule, StartRule::S2);
    EXPECT_EQ(classify_formation(IndexSet::of({2, 5}), IndexSet::of({5})).kind, FormationKind::LeftSnake);
    EXPECT_EQ(classify_formation({}, {}).kind, FormationKind::Empty);
    EXPECT_EQ(classify_formation({}, IndexSet::of({1, 2})).kind, FormationKind::LeftStick);
    EXPECT_EQ(classify_formation(IndexSet::of({1, 2}), IndexSet::of({1, 2})).kind, FormationKind::Block);
    const Formation bd = classify_formation(IndexSet::of({1, 2, 4}), IndexSet::of({1, 2}));
    EXPECT_EQ(bd.kind, FormationKind::BlockDot);
    EXPECT_EQ(bd.dot, Side::Right);
    EXPECT_EQ(bd.block_second, 2);
    const Formation sd = classify_formation(IndexSet::of({1, 2}), IndexSet::of({4}));
    EXPECT_EQ(sd.kind, FormationKind::StickDot);
    EXPECT_EQ(sd.rule, StartRule::S3);
    EXPECT_EQ(sd.dot_row, 4);
    // A-stick, shared row, C tail, then a block
    const Formation sb = classify_formation(IndexSet::of({1, 2, 5, 6}), IndexSet::of({2, 3, 5, 6}));
    EXPECT_EQ(sb.kind, FormationKind::SnakeBlock);
    EXPECT_EQ(sb.snake, Side::Left);
    EXPECT_EQ(sb.snake_last, 3);
    EXPECT_EQ(sb.block_first, 5);
    EXPECT_EQ(sb.block_length, 2);
}

// Total, deterministic, and the five rules are the only outcomes.
TEST(Formation, TotalOverRowsUpTo8) {
    const int r = 8;
    const std::uint64_t full = (std::uint64_t{1} << r) - 2;  // rows 1..r-1
    std::map<StartRule, std::uint64_t> seen;
    for (std::uint64_t a = 0; a <= full; a += 2)
        for (std::uint64_t c = 0; c <= full; c += 2) {
            const IndexSet A(a), C(c);
            const Formation f = classify_formation(A, C);
            const Formation g = classify_formation(A, C);
            ASSERT_EQ(f.kind, g.kind);
            ASSERT_EQ(f.rule, g.rule);
            ++seen[f.rule];
            switch (f.rule) {
                case StartRule::S1: ASSERT_TRUE(C.empty()); break;
                case StartRule::S2:
                    ASSERT_TRUE(f.kind == FormationKind::LeftStick || f.kind == FormationKind::RightSnake);
                    break;
                case StartRule::S3: ASSERT_GT(f.dot_row, 0); break;
                case StartRule::S4: ASSERT_GE(f.block_length, 2); break;
                case StartRule::S5: ASSERT_NE(f.snake, Side::None); break;
            }
        }
    EXPECT_EQ(seen.size(), 5U);
}

TEST(Arrangement, JsonShape) {
    const auto d = diagram({2, 1}, true);
    auto g = enumerate_G(d, {2, 2});
    ASSERT_TRUE(g.next());
    const auto j = to_json(*d, g.current());
    EXPECT_EQ(j.at("corner"), nlohmann::ordered_json::parse("[2,2]"));
    ASSERT_TRUE(j.at("labels").is_object());
    EXPECT_EQ(j.at("labels").begin().key(), "1,1");
}

TEST(Sampling, ValidAndSeeded) {
    const Diagram d(Partition({8, 7, 5, 3, 2}), true);
    const auto dom = g_domains(d, {5, 6});
    std::mt19937_64 a(9), b(9);
    for (int i = 0; i < 200; ++i) {
        const Labels x = sample_labels(dom, a);
        ASSERT_TRUE(labels_valid(dom, x));
        ASSERT_EQ(x, sample_labels(dom, b));
    }
}
