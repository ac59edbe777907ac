#pragma once

#include <array>
#include <cstdint>

#include "bazaikin/errors.hpp"
#include "bazaikin/su5.hpp"

namespace bazaikin {

/// Element of Sp(2) in the complex pair form a + b*j with a, b complex
/// 2x2 blocks.  Embeds into SU(5) as [[a, b, 0], [-conj(b), conj(a), 0],
/// [0, 0, 1]]; quaternionic unitarity of (a, b) is exactly membership of
/// the embedded matrix in SU(5).
struct Sp2Element {
    Matrix2c a = Matrix2c::Identity();
    Matrix2c b = Matrix2c::Zero();
};

Sp2Element sp2_identity();

/// The 5x5 embedding.  Throws NotInGroup when (a, b) is not quaternionic
/// unitary within tol.
Matrix5c embed_sp2(const Sp2Element& e, double tol = kGroupTol);

/// Blocks of an embedded element; no membership check.
Sp2Element sp2_from_blocks(const Matrix4c& quaternionic_block);

/// Group-membership residual of the embedded matrix (0 for exact members).
double sp2_residual(const Sp2Element& e);

/// Residual of the direct quaternionic-unitarity form
/// a^H a + b^T conj(b) = I (equivalent to membership of the embedding).
double quaternionic_unitarity_residual(const Sp2Element& e);

/// First four entries of embedded column 2 (0-based index 1):
/// (a12, a22, -conj(b12), -conj(b22)).
Vector4c column2(const Sp2Element& e);
/// First four entries of embedded column 4 (0-based index 3):
/// (b12, b22, conj(a12), conj(a22)).  Determined by column 2.
Vector4c column4(const Sp2Element& e);

/// Column 4 as a function of a column-2 value, without building the group
/// element: (-conj(v3), -conj(v4), conj(v1), conj(v2)).
Vector4c column4_from_column2(const Vector4c& v);

/// An element whose embedded column 2 equals (v, 0).  The companion
/// quaternionic column comes from Gram-Schmidt against the standard basis
/// vector with the smaller overlap, so the construction is deterministic
/// and well-conditioned for every unit v.  Throws InvalidInput when v is
/// not a unit vector within tol.
Sp2Element sp2_from_column(const Vector4c& v, double tol = kGroupTol);

/// Approximately Haar-distributed element: Gaussian quaternion 2x2
/// matrix, quaternionic Gram-Schmidt on the columns.  Deterministic for
/// a fixed seed.
Sp2Element random_sp2(std::uint64_t seed);

/// Tangent coordinates: two pure-imaginary diagonal quaternions (3+3)
/// and one full off-diagonal quaternion (4).
using Sp2Tangent = std::array<double, 10>;

/// Embedded 4x4 skew-Hermitian quaternionic-structure matrix of t.
Matrix4c sp2_tangent_matrix(const Sp2Tangent& t);

/// exp of the tangent vector, as a group element.
Sp2Element sp2_exp(const Sp2Tangent& t);

/// e * exp(X) for an embedded tangent matrix X (skew-Hermitian,
/// quaternionic).  Stays in Sp(2) up to rounding.
Sp2Element sp2_translate(const Sp2Element& e, const Matrix4c& x);

/// Projection of an arbitrary complex 4x4 matrix onto the embedded Lie
/// algebra: skew-Hermitian part intersected with the quaternionic
/// structure J conj(X) J^{-1} = X.
Matrix4c project_to_sp2_algebra(const Matrix4c& x);

}  // namespace bazaikin
