#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "bazaikin/rng.hpp"

namespace bazaikin {

using Complex = std::complex<double>;
using Matrix5c = Eigen::Matrix<Complex, 5, 5>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Matrix2c = Eigen::Matrix<Complex, 2, 2>;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;

/// Group-membership tolerance: double precision with 5x5 products loses
/// at most ~3 digits, so 1e-10 is generous but meaningful.
inline constexpr double kGroupTol = 1e-10;
/// Tolerance at which a functional value counts as a certified zero.
inline constexpr double kZeroTol = 1e-9;

/// max_ij |(A^H A - I)_ij|
double unitarity_residual(const Matrix5c& a);

/// |det(A) - 1|
double determinant_residual(const Matrix5c& a);

bool is_special_unitary(const Matrix5c& a, double tol = kGroupTol);

/// First four entries of row `row` (0-based).
Vector4c row_slice(const Matrix5c& a, int row);

/// Bilinear dot product sum_i v_i w_i (no conjugation).
Complex bilinear_dot(const Vector4c& v, const Vector4c& w);

/// Approximately Haar-distributed special unitary: complex Gaussian
/// matrix, Householder QR, diagonal phases of R absorbed into Q, then the
/// last column scaled by the conjugate determinant.  Deterministic for a
/// fixed seed.
Matrix5c random_su5(std::uint64_t seed);

/// Random traceless skew-Hermitian direction of unit Frobenius norm.
Matrix5c random_su5_tangent(Rng& rng);

/// exp(X) for skew-Hermitian X, through the eigendecomposition of the
/// Hermitian matrix -iX; the result is unitary to machine precision.
Matrix4c exp_skew_hermitian(const Matrix4c& x);
Matrix5c exp_skew_hermitian(const Matrix5c& x);

/// Principal logarithm of a unitary matrix via complex Schur.  Fails
/// (returns false) when an eigenvalue is within `branch_margin` of -1,
/// where the principal branch is unreliable.
bool principal_log_unitary(const Matrix4c& u, Matrix4c& log_out, double branch_margin = 5e-2);

/// Row-major re/im pairs at 17 significant digits, for failure reports.
std::string serialize_matrix(const Matrix5c& a);

}  // namespace bazaikin
