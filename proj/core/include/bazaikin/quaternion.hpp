#pragma once

#include <cmath>
#include <complex>

namespace bazaikin {

/// Quaternion in the complex-pair form alpha + beta*j, the form in which
/// 2x2 quaternion matrices embed into C^{4x4}.  Multiplication uses
/// j*z = conj(z)*j and j^2 = -1.
struct Quaternion {
    std::complex<double> alpha{};
    std::complex<double> beta{};

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return {x.alpha + y.alpha, x.beta + y.beta};
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return {x.alpha - y.alpha, x.beta - y.beta};
    }
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        return {x.alpha * y.alpha - x.beta * std::conj(y.beta),
                x.alpha * y.beta + x.beta * std::conj(y.alpha)};
    }
    friend Quaternion operator*(const Quaternion& x, double t) {
        return {x.alpha * t, x.beta * t};
    }

    Quaternion conjugate() const { return {std::conj(alpha), -beta}; }

    double norm_sq() const { return std::norm(alpha) + std::norm(beta); }
    double norm() const { return std::sqrt(norm_sq()); }
};

/// Quaternionic 2-vector with the right-module inner product
/// <u, v> = conj(u1) v1 + conj(u2) v2.
struct QuaternionPair {
    Quaternion x{};
    Quaternion y{};

    friend QuaternionPair operator-(const QuaternionPair& u, const QuaternionPair& v) {
        return {u.x - v.x, u.y - v.y};
    }
    /// Right scalar action, v * q componentwise.
    friend QuaternionPair operator*(const QuaternionPair& v, const Quaternion& q) {
        return {v.x * q, v.y * q};
    }
    friend QuaternionPair operator*(const QuaternionPair& v, double t) {
        return {v.x * t, v.y * t};
    }

    double norm_sq() const { return x.norm_sq() + y.norm_sq(); }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Quaternion quaternion_inner(const QuaternionPair& u, const QuaternionPair& v) {
    return u.x.conjugate() * v.x + u.y.conjugate() * v.y;
}

}  // namespace bazaikin
