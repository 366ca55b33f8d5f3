#include "rydsim/density_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rydsim {

std::string StateCheck::describe() const {
    std::ostringstream os;
    os << "herm_err=" << herm_err << " trace_err=" << trace_err
       << " min_eig=" << min_eigenvalue;
    return os.str();
}

StateCheck check_density(const Eigen::MatrixXcd& rho) {
    StateCheck c;
    c.herm_err = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    c.trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    // Eigenvalues of the Hermitian part; for a nearly Hermitian rho this is
    // the meaningful positivity measure.
    Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    c.min_eigenvalue = es.eigenvalues().minCoeff();
    return c;
}

DensityMatrix DensityMatrix::from_operator(Operator op) {
    StateCheck c = check_density(op.matrix());
    if (!c.ok()) {
        throw std::invalid_argument("not a valid density matrix: " +
                                    c.describe());
    }
    return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::pure(const SpaceDescriptor& space,
                                  const Eigen::VectorXcd& psi) {
    if (psi.size() != space.total_dim()) {
        throw std::invalid_argument("pure-state vector dimension mismatch");
    }
    const double n = psi.norm();
    if (n == 0.0) {
        throw std::invalid_argument("pure state from zero vector");
    }
    Eigen::VectorXcd v = psi / n;
    return DensityMatrix(Operator(space, v * v.adjoint()));
}

StateCheck DensityMatrix::check() const { return check_density(op_.matrix()); }

Complex expectation(const DensityMatrix& rho, const Operator& a) {
    require_same_space(rho.space(), a.space(), "expectation");
    return (rho.matrix() * a.matrix()).trace();
}

}  // namespace rydsim
