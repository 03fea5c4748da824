#pragma once

#include <memory>
#include <vector>

#include "hooklab/arrangements.hpp"
#include "hooklab/bijection.hpp"

namespace hooklab {

// Phi for an ordinary or shifted diagram, with cell-level conversions.
class DiagramBijection {
public:
    explicit DiagramBijection(const Diagram& d);

    const Diagram& diagram() const { return *d_; }
    const Bijection& bijection() const { return *b_; }
    const CornerMaps& maps(Cell corner) const;

    FArrangement phi(const GArrangement& g) const;
    GArrangement phi_inverse(const FArrangement& f) const;
    // G, e(G), e^2(G), ... until no dots remain.
    std::vector<GArrangement> trace(const GArrangement& g) const;

private:
    std::shared_ptr<const Diagram> d_;
    std::shared_ptr<const HookSystem> h_;
    std::unique_ptr<Bijection> b_;
};

}  // namespace hooklab
