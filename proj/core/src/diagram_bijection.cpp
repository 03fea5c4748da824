#include "hooklab/diagram_bijection.hpp"

#include <stdexcept>

#include "hooklab/bijection_plain.hpp"
#include "hooklab/bijection_shifted.hpp"

namespace hooklab {

DiagramBijection::DiagramBijection(const Diagram& d)
    : d_(std::make_shared<const Diagram>(d)), h_(std::make_shared<const HookSystem>(HookSystem::from_diagram(d))) {
    std::vector<std::shared_ptr<const CornerMaps>> maps;
    for (Cell c : d_->corners()) {
        if (d_->shifted())
            maps.push_back(std::make_shared<ShiftedMaps>(d_, h_, c));
        else
            maps.push_back(std::make_shared<PlainMaps>(d_, h_, c));
    }
    b_ = std::make_unique<Bijection>(std::move(maps));
}

const CornerMaps& DiagramBijection::maps(Cell corner) const {
    if (!d_->is_corner(corner)) throw std::invalid_argument(to_string(corner) + " is not a corner");
    return b_->maps_for(d_->index(corner));
}

FArrangement DiagramBijection::phi(const GArrangement& g) const {
    if (!d_->is_corner(g.corner)) throw std::invalid_argument(to_string(g.corner) + " is not a corner");
    PhiImage img = b_->phi(d_->index(g.corner), g.labels);
    return {d_->cell(img.start), std::move(img.labels)};
}

GArrangement DiagramBijection::phi_inverse(const FArrangement& f) const {
    if (!d_->contains(f.start)) throw std::invalid_argument(to_string(f.start) + " outside diagram");
    auto [c, g] = b_->phi_inverse(d_->index(f.start), f.labels);
    return {d_->cell(c), std::move(g)};
}

std::vector<GArrangement> DiagramBijection::trace(const GArrangement& g) const {
    std::vector<GArrangement> out;
    for (auto& l : b_->chain(d_->index(g.corner), g.labels)) out.push_back({g.corner, std::move(l)});
    return out;
}

}  // namespace hooklab
