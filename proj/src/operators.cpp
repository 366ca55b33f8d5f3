#include "rydsim/operators.hpp"

#include <stdexcept>

namespace rydsim {

void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b,
                        const char* what) {
    if (a == b) return;
    throw std::invalid_argument(std::string(what) + ": space mismatch, " +
                                a.describe() + " vs " + b.describe());
}

Operator::Operator(SpaceDescriptor space, Eigen::MatrixXcd entries)
    : space_(std::move(space)), m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) {
        throw std::invalid_argument("operator matrix is not square");
    }
    if (m_.rows() != space_.total_dim()) {
        throw std::invalid_argument(
            "operator matrix is " + std::to_string(m_.rows()) + "x" +
            std::to_string(m_.cols()) + " but space " + space_.describe() +
            " has dimension " + std::to_string(space_.total_dim()));
    }
}

Operator Operator::identity(const SpaceDescriptor& space) {
    return Operator(space, Eigen::MatrixXcd::Identity(space.total_dim(),
                                                      space.total_dim()));
}

Operator Operator::zero(const SpaceDescriptor& space) {
    return Operator(space,
                    Eigen::MatrixXcd::Zero(space.total_dim(), space.total_dim()));
}

Operator Operator::ketbra(const SpaceDescriptor& space, int i, int j) {
    const int d = space.total_dim();
    if (i < 0 || i >= d || j < 0 || j >= d) {
        throw std::invalid_argument("ketbra index out of range");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    m(i, j) = 1.0;
    return Operator(space, std::move(m));
}

bool Operator::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXcd Operator::apply(const Eigen::VectorXcd& v) const {
    if (v.size() != m_.rows()) {
        throw std::invalid_argument("vector dimension does not match operator");
    }
    return m_ * v;
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_space(a.space_, b.space_, "operator sum");
    return Operator(a.space_, a.m_ + b.m_);
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_space(a.space_, b.space_, "operator difference");
    return Operator(a.space_, a.m_ - b.m_);
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_space(a.space_, b.space_, "operator product");
    return Operator(a.space_, a.m_ * b.m_);
}

Operator operator*(Complex c, const Operator& a) {
    return Operator(a.space_, c * a.m_);
}

Operator operator*(double c, const Operator& a) {
    return Operator(a.space_, c * a.m_);
}

Operator tensor_product(const Operator& a, const Operator& b) {
    const auto& A = a.matrix();
    const auto& B = b.matrix();
    const int ra = static_cast<int>(A.rows());
    const int rb = static_cast<int>(B.rows());
    Eigen::MatrixXcd out(ra * rb, ra * rb);
    for (int i = 0; i < ra; ++i) {
        for (int j = 0; j < ra; ++j) {
            out.block(i * rb, j * rb, rb, rb) = A(i, j) * B;
        }
    }
    return Operator(concat(a.space(), b.space()), std::move(out));
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_space(a.space(), b.space(), "commutator");
    return Operator(a.space(), a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

Spectrum hermitian_eigensystem(const Operator& a) {
    if (!a.is_hermitian()) {
        throw std::invalid_argument(
            "hermitian_eigensystem: input is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.matrix());
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigensystem: eigensolver failed");
    }
    return Spectrum{es.eigenvalues(), es.eigenvectors()};
}

}  // namespace rydsim
