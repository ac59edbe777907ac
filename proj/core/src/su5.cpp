#include "bazaikin/su5.hpp"

#include <cstdio>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace bazaikin {

double unitarity_residual(const Matrix5c& a) {
    const Matrix5c gram = a.adjoint() * a - Matrix5c::Identity();
    return gram.cwiseAbs().maxCoeff();
}

double determinant_residual(const Matrix5c& a) {
    return std::abs(a.determinant() - Complex(1.0, 0.0));
}

bool is_special_unitary(const Matrix5c& a, double tol) {
    return unitarity_residual(a) <= tol && determinant_residual(a) <= tol;
}

Vector4c row_slice(const Matrix5c& a, int row) {
    return a.row(row).head<4>().transpose();
}

Complex bilinear_dot(const Vector4c& v, const Vector4c& w) {
    Complex s{};
    for (int i = 0; i < 4; ++i) s += v(i) * w(i);
    return s;
}

Matrix5c random_su5(std::uint64_t seed) {
    Rng rng(seed);
    Matrix5c g;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) g(i, j) = rng.next_complex_gaussian();
    }
    const Eigen::HouseholderQR<Matrix5c> qr(g);
    Matrix5c q = qr.householderQ();
    const Matrix5c r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 5; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0 ? d / mag : Complex(1.0, 0.0);
    }
    q.col(4) *= std::conj(q.determinant());
    return q;
}

Matrix5c random_su5_tangent(Rng& rng) {
    Matrix5c g;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) g(i, j) = rng.next_complex_gaussian();
    }
    Matrix5c x = (g - g.adjoint()) / 2.0;
    const Complex trace = x.trace() / 5.0;
    for (int i = 0; i < 5; ++i) x(i, i) -= trace;
    const double norm = x.norm();
    if (norm > 0) x /= norm;
    return x;
}

namespace {

template <typename Mat>
Mat exp_skew_impl(const Mat& x) {
    // -iX is Hermitian, so X = i H with real spectrum; exp(X) = V e^{i L} V^H.
    const Mat h = Complex(0.0, -1.0) * x;
    const Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Mat phases = Mat::Zero();
    for (int k = 0; k < Mat::RowsAtCompileTime; ++k) {
        phases(k, k) = std::exp(Complex(0.0, es.eigenvalues()(k)));
    }
    return es.eigenvectors() * phases * es.eigenvectors().adjoint();
}

}  // namespace

Matrix4c exp_skew_hermitian(const Matrix4c& x) { return exp_skew_impl(x); }
Matrix5c exp_skew_hermitian(const Matrix5c& x) { return exp_skew_impl(x); }

bool principal_log_unitary(const Matrix4c& u, Matrix4c& log_out, double branch_margin) {
    const Eigen::ComplexSchur<Matrix4c> schur(u);
    const Matrix4c& t = schur.matrixT();
    // A unitary matrix is normal, so T must be diagonal up to rounding.
    double off = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) off = std::max(off, std::abs(t(i, j)));
    }
    if (off > 1e-8) return false;
    Matrix4c logs = Matrix4c::Zero();
    for (int k = 0; k < 4; ++k) {
        const Complex lambda = t(k, k);
        if (std::abs(lambda + Complex(1.0, 0.0)) < branch_margin) return false;
        logs(k, k) = Complex(0.0, std::arg(lambda));
    }
    log_out = schur.matrixU() * logs * schur.matrixU().adjoint();
    return true;
}

std::string serialize_matrix(const Matrix5c& a) {
    std::string s;
    char buf[64];
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g", a(i, j).real(), a(i, j).imag());
            if (i || j) s += ' ';
            s += buf;
        }
    }
    return s;
}

}  // namespace bazaikin
