#pragma once

#include <string>
#include <vector>

namespace rydsim {

// One tensor factor of a composite Hilbert space.
struct SpaceFactor {
    std::string label;
    int dim = 0;

    bool operator==(const SpaceFactor&) const = default;
};

// Ordered list of labeled tensor factors. Every Operator carries one of
// these so dimension mismatches are caught at the point of use instead of
// deep inside a matrix product.
class SpaceDescriptor {
public:
    SpaceDescriptor() = default;
    explicit SpaceDescriptor(std::vector<SpaceFactor> factors);

    static SpaceDescriptor single(std::string label, int dim);

    const std::vector<SpaceFactor>& factors() const { return factors_; }
    int total_dim() const { return total_dim_; }

    bool operator==(const SpaceDescriptor&) const = default;

    // e.g. "atomA(4) x atomB(4) x cavity(3)"
    std::string describe() const;

private:
    std::vector<SpaceFactor> factors_;
    int total_dim_ = 1;
};

// Concatenation of factor lists, as produced by tensor products.
SpaceDescriptor concat(const SpaceDescriptor& a, const SpaceDescriptor& b);

}  // namespace rydsim
