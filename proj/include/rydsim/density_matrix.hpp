#pragma once

#include <string>

#include "rydsim/operators.hpp"

namespace rydsim {

// Validity report for a candidate density matrix. Violations are reported,
// never silently repaired.
struct StateCheck {
    double herm_err = 0.0;        // max |rho - rho^dag| entrywise
    double trace_err = 0.0;       // |Tr rho - 1|
    double min_eigenvalue = 0.0;  // smallest eigenvalue of (rho+rho^dag)/2

    bool ok() const {
        return herm_err <= kHermTol && trace_err <= kTraceTol &&
               min_eigenvalue >= kPositivityFloor;
    }
    std::string describe() const;
};

// Hermitian, unit-trace, positive-semidefinite operator. Construction
// validates; use check() to re-examine a state mid-integration.
class DensityMatrix {
public:
    static DensityMatrix from_operator(Operator op);
    // |psi><psi| (psi normalized here).
    static DensityMatrix pure(const SpaceDescriptor& space,
                              const Eigen::VectorXcd& psi);

    const Operator& op() const { return op_; }
    const SpaceDescriptor& space() const { return op_.space(); }
    const Eigen::MatrixXcd& matrix() const { return op_.matrix(); }

    StateCheck check() const;

private:
    explicit DensityMatrix(Operator op) : op_(std::move(op)) {}
    Operator op_;
};

StateCheck check_density(const Eigen::MatrixXcd& rho);

// Tr[rho a]; real within 1e-12 for Hermitian a. Spaces must match.
Complex expectation(const DensityMatrix& rho, const Operator& a);

}  // namespace rydsim
