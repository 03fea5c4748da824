#pragma once

#include <memory>
#include <optional>

#include "hooklab/arrangements.hpp"
#include "hooklab/bijection.hpp"

namespace hooklab {

// s(A,B) = (min(A u {r}), min(B u {s})).
Cell start_square_plain(IndexSet A, IndexSet B, Cell corner);

// Punctured hook of z = (i,j), i < r, j < s, split into the punctured hooks
// of (i,s) (part 0) and (r,j) (part 1): arm cells beyond column s stay in row
// i, the rest of the arm moves to row r; leg cells down to row r move to
// column s, the remaining leg and (shifted) the broken row are kept.
struct SplitCell {
    int part = 0;
    Cell cell;
    friend bool operator==(const SplitCell&, const SplitCell&) = default;
};

SplitCell row_column_split(Cell z, Cell corner, Cell label);
std::optional<Cell> row_column_join(const Diagram& d, Cell z, Cell corner, SplitCell piece);

class PlainMaps : public CornerMaps {
public:
    PlainMaps(std::shared_ptr<const Diagram> d, std::shared_ptr<const HookSystem> h, Cell corner);

    const HookSystem& system() const override { return *h_; }
    int corner() const override { return c_; }
    int start(const Labels& g) const override;
    Labels erase(const Labels& g) const override;
    std::vector<Labels> preimages(const Labels& gp, int z) const override;

    const Diagram& diagram() const { return *d_; }

private:
    std::shared_ptr<const Diagram> d_;
    std::shared_ptr<const HookSystem> h_;
    Cell corner_;
    int c_;
};

GArrangement erase_dot_plain(const Diagram& d, const GArrangement& g);

}  // namespace hooklab
