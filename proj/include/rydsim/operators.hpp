#pragma once

#include <Eigen/Dense>
#include <complex>

#include "rydsim/space.hpp"

namespace rydsim {

// Tolerances shared across the library. One order looser than the error
// accumulated by double-precision RK4 over ~1e6 steps.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPositivityFloor = -1e-8;

using Complex = std::complex<double>;

// Dense complex matrix tagged with its space. Immutable after construction;
// all algebra returns new values.
class Operator {
public:
    Operator(SpaceDescriptor space, Eigen::MatrixXcd entries);

    static Operator identity(const SpaceDescriptor& space);
    static Operator zero(const SpaceDescriptor& space);
    // |i><j| on the given space.
    static Operator ketbra(const SpaceDescriptor& space, int i, int j);

    const SpaceDescriptor& space() const { return space_; }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

    Operator adjoint() const { return Operator(space_, m_.adjoint()); }
    Complex trace() const { return m_.trace(); }
    double max_abs() const { return m_.cwiseAbs().maxCoeff(); }
    bool is_hermitian(double tol = kHermTol) const;

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(Complex c, const Operator& a);
    friend Operator operator*(double c, const Operator& a);

private:
    SpaceDescriptor space_;
    Eigen::MatrixXcd m_;
};

// Eigendecomposition of a Hermitian operator: ascending eigenvalues,
// orthonormal eigenvector columns.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
};

// Kronecker product; a's indices vary slowest. The result space is the
// concatenation of the factor lists.
Operator tensor_product(const Operator& a, const Operator& b);

// ab - ba. Spaces must match.
Operator commutator(const Operator& a, const Operator& b);

// Rejects non-Hermitian input (within kHermTol).
Spectrum hermitian_eigensystem(const Operator& a);

void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b,
                        const char* what);

}  // namespace rydsim
