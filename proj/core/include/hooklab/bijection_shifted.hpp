#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hooklab/arrangements.hpp"
#include "hooklab/bijection.hpp"

namespace hooklab {

struct StartSquare {
    Cell cell;
    Formation formation;
};

// Row min(A u C u {r}); column from the formation rule S1..S5.
StartSquare start_square(IndexSet A, IndexSet B, IndexSet C, Cell corner);

enum class DecompositionKind {
    ViaSAndRm1,  // H(i,s) + H(j+1,r-1)
    ViaRm1AndS,  // H(i,r-1) + H(j+1,s)
    RowAndColumn,  // H(i,s) + H(r,j), for r-1 < j < s
};
std::string to_string(DecompositionKind k);

struct HookPiece {
    int part = 0;
    Cell cell;
    friend bool operator==(const HookPiece&, const HookPiece&) = default;
};

// Invertible map from the punctured hook of z onto the disjoint union of two
// punctured hooks in the shaded row and columns of the corner.
class Decomposition {
public:
    Decomposition(const Diagram& d, Cell corner, Cell z, DecompositionKind kind);

    DecompositionKind kind() const { return kind_; }
    Cell owner(int part) const { return owners_[part]; }
    HookPiece forward(Cell label) const;
    // nullopt when the piece is not the image of a cell of the punctured hook.
    std::optional<Cell> backward(HookPiece piece) const;

private:
    const Diagram* d_;
    Cell corner_;
    Cell z_;
    DecompositionKind kind_;
    Cell owners_[2];
};

// Snakes on rows I (ascending) of the shaded columns r-1 and s.
// L_I: rows before the pivot carry a dot only in column s, the pivot carries
// dots in both, rows after it only in column r-1. R_I is the mirror image.
bool in_left_snakes(const Diagram& d, Cell corner, const Labels& g, IndexSet I);
bool in_right_snakes(const Diagram& d, Cell corner, const Labels& g, IndexSet I);

// Psi_I : L_I -> R_I and its inverse. Identity when |I| <= 1. Throws
// std::invalid_argument on arrangements outside the domain.
Labels flip_snake(const Diagram& d, Cell corner, const Labels& g, IndexSet I);
Labels flip_snake_inverse(const Diagram& d, Cell corner, const Labels& g, IndexSet I);

struct EraseTrace {
    Labels result;
    Cell start;
    Formation formation;
    std::optional<DecompositionKind> decomposition;
    std::optional<Cell> target;  // the cell whose dot was erased
    bool flipped = false;

    nlohmann::json to_json() const;
};

class ShiftedMaps : public CornerMaps {
public:
    ShiftedMaps(std::shared_ptr<const Diagram> d, std::shared_ptr<const HookSystem> h, Cell corner);

    const HookSystem& system() const override { return *h_; }
    int corner() const override { return c_; }
    int start(const Labels& g) const override;
    Labels erase(const Labels& g) const override { return erase_traced(g).result; }
    std::vector<Labels> preimages(const Labels& gp, int z) const override;

    EraseTrace erase_traced(const Labels& g) const;
    const Diagram& diagram() const { return *d_; }
    Cell corner_cell() const { return corner_; }

private:
    std::shared_ptr<const Diagram> d_;
    std::shared_ptr<const HookSystem> h_;
    Cell corner_;
    int c_;
};

GArrangement erase_dot(const Diagram& d, const GArrangement& g);

}  // namespace hooklab
