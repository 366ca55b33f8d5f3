#include "rydsim/space.hpp"

#include <set>
#include <stdexcept>

namespace rydsim {

SpaceDescriptor::SpaceDescriptor(std::vector<SpaceFactor> factors)
    : factors_(std::move(factors)) {
    std::set<std::string> seen;
    for (const auto& f : factors_) {
        if (f.dim <= 0) {
            throw std::invalid_argument("space factor '" + f.label +
                                        "' has non-positive dimension");
        }
        if (!seen.insert(f.label).second) {
            throw std::invalid_argument("duplicate space factor label '" +
                                        f.label + "'");
        }
        total_dim_ *= f.dim;
    }
}

SpaceDescriptor SpaceDescriptor::single(std::string label, int dim) {
    return SpaceDescriptor({{std::move(label), dim}});
}

std::string SpaceDescriptor::describe() const {
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += " x ";
        out += f.label + "(" + std::to_string(f.dim) + ")";
    }
    return out.empty() ? "scalar(1)" : out;
}

SpaceDescriptor concat(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    std::vector<SpaceFactor> fs = a.factors();
    fs.insert(fs.end(), b.factors().begin(), b.factors().end());
    return SpaceDescriptor(std::move(fs));
}

}  // namespace rydsim
