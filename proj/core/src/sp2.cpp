#include "bazaikin/sp2.hpp"

#include <cmath>

#include "bazaikin/errors.hpp"
#include "bazaikin/quaternion.hpp"

namespace bazaikin {

namespace {

Matrix4c embed4(const Sp2Element& e) {
    Matrix4c m;
    m.block<2, 2>(0, 0) = e.a;
    m.block<2, 2>(0, 2) = e.b;
    m.block<2, 2>(2, 0) = -e.b.conjugate();
    m.block<2, 2>(2, 2) = e.a.conjugate();
    return m;
}

Matrix5c embed5(const Sp2Element& e) {
    Matrix5c m = Matrix5c::Zero();
    m.block<4, 4>(0, 0) = embed4(e);
    m(4, 4) = Complex(1.0, 0.0);
    return m;
}

// J = [[0, I2], [-I2, 0]]; the embedded image is the fixed set of
// X -> J conj(X) J^{-1}.
Matrix4c structure_conjugate(const Matrix4c& x) {
    Matrix4c j = Matrix4c::Zero();
    j.block<2, 2>(0, 2) = Matrix2c::Identity();
    j.block<2, 2>(2, 0) = -Matrix2c::Identity();
    return j * x.conjugate() * j.transpose();
}

Sp2Element element_from_columns(const QuaternionPair& c1, const QuaternionPair& c2) {
    Sp2Element e;
    e.a << c1.x.alpha, c2.x.alpha, c1.y.alpha, c2.y.alpha;
    e.b << c1.x.beta, c2.x.beta, c1.y.beta, c2.y.beta;
    return e;
}

}  // namespace

Sp2Element sp2_identity() { return Sp2Element{}; }

double quaternionic_unitarity_residual(const Sp2Element& e) {
    const Matrix2c gram =
        e.a.adjoint() * e.a + e.b.transpose() * e.b.conjugate() - Matrix2c::Identity();
    return gram.cwiseAbs().maxCoeff();
}

double sp2_residual(const Sp2Element& e) {
    const Matrix4c m = embed4(e);
    const Matrix4c gram = m.adjoint() * m - Matrix4c::Identity();
    return gram.cwiseAbs().maxCoeff();
}

Matrix5c embed_sp2(const Sp2Element& e, double tol) {
    const double res = sp2_residual(e);
    if (res > tol) {
        throw NotInGroup("quaternionic unitarity residual " + std::to_string(res));
    }
    return embed5(e);
}

Sp2Element sp2_from_blocks(const Matrix4c& q) {
    Sp2Element e;
    e.a = q.block<2, 2>(0, 0);
    e.b = q.block<2, 2>(0, 2);
    return e;
}

Vector4c column2(const Sp2Element& e) {
    Vector4c v;
    v << e.a(0, 1), e.a(1, 1), -std::conj(e.b(0, 1)), -std::conj(e.b(1, 1));
    return v;
}

Vector4c column4(const Sp2Element& e) {
    Vector4c v;
    v << e.b(0, 1), e.b(1, 1), std::conj(e.a(0, 1)), std::conj(e.a(1, 1));
    return v;
}

Vector4c column4_from_column2(const Vector4c& v) {
    Vector4c w;
    w << -std::conj(v(2)), -std::conj(v(3)), std::conj(v(0)), std::conj(v(1));
    return w;
}

Sp2Element sp2_from_column(const Vector4c& v, double tol) {
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > tol) {
        throw InvalidInput("column norm " + std::to_string(norm) + " is not 1");
    }
    const QuaternionPair given{{v(0), -std::conj(v(2))}, {v(1), -std::conj(v(3))}};

    // Complete against whichever standard basis vector overlaps less.
    const QuaternionPair e1{{Complex(1, 0), {}}, {{}, {}}};
    const QuaternionPair e2{{{}, {}}, {Complex(1, 0), {}}};
    const bool use_e2 = given.x.norm_sq() >= given.y.norm_sq();
    const QuaternionPair& basis = use_e2 ? e2 : e1;

    QuaternionPair first = basis - given * quaternion_inner(given, basis);
    first = first * (1.0 / first.norm());
    return element_from_columns(first, given);
}

Sp2Element random_sp2(std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        auto gauss_quat = [&rng] {
            return Quaternion{rng.next_complex_gaussian(), rng.next_complex_gaussian()};
        };
        QuaternionPair g1{gauss_quat(), gauss_quat()};
        QuaternionPair g2{gauss_quat(), gauss_quat()};
        if (g1.norm() < 1e-6) continue;
        const QuaternionPair c1 = g1 * (1.0 / g1.norm());
        QuaternionPair c2 = g2 - c1 * quaternion_inner(c1, g2);
        if (c2.norm() < 1e-6) continue;
        c2 = c2 * (1.0 / c2.norm());
        return element_from_columns(c1, c2);
    }
}

Matrix4c sp2_tangent_matrix(const Sp2Tangent& t) {
    const Quaternion p{Complex(0.0, t[0]), Complex(t[1], t[2])};
    const Quaternion r{Complex(0.0, t[3]), Complex(t[4], t[5])};
    const Quaternion q{Complex(t[6], t[7]), Complex(t[8], t[9])};
    const Quaternion qn = q.conjugate() * -1.0;
    Sp2Element x;
    x.a << p.alpha, q.alpha, qn.alpha, r.alpha;
    x.b << p.beta, q.beta, qn.beta, r.beta;
    return embed4(x);
}

Sp2Element sp2_exp(const Sp2Tangent& t) {
    return sp2_from_blocks(exp_skew_hermitian(sp2_tangent_matrix(t)));
}

Sp2Element sp2_translate(const Sp2Element& e, const Matrix4c& x) {
    return sp2_from_blocks(embed4(e) * exp_skew_hermitian(x));
}

Matrix4c project_to_sp2_algebra(const Matrix4c& x) {
    const Matrix4c skew = (x - x.adjoint()) / 2.0;
    return (skew + structure_conjugate(skew)) / 2.0;
}

}  // namespace bazaikin
