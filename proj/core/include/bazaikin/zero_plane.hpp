#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "bazaikin/sp2.hpp"
#include "bazaikin/tuple.hpp"

namespace bazaikin {

/// A point [A] carries a zero-curvature plane iff either the weighted
/// fifth-column condition holds at A or the plane functional below has a
/// zero on Sp(2).  This module checks both conditions in floating point.

/// sum_l q_l - sum_l |A_{l5}|^2 q_l; zero (within tolerance) means the
/// fifth-column condition holds at A.
double fifth_column_residual(const FiveTuple& q, const Matrix5c& a);

/// sum_l (|(Ah)_{l2}|^2 + |(Ah)_{l4}|^2) q_l, the functional whose zeros
/// witness zero-curvature planes at [A].
double plane_functional(const FiveTuple& q, const Matrix5c& a, const Sp2Element& h);

/// Element whose second and fourth embedded columns are annihilated by
/// the fifth row slice of A: solves the real-linear 4x8 system
/// s5.h2 = s5.h4 = 0 by column-pivoted elimination (smallest-index free
/// variable set to 1), then unit-normalizes the kernel vector.
/// Throws NotInGroup when the fourth and fifth row slices both vanish,
/// which cannot happen for a special unitary A.
Sp2Element kernel_sign_candidate(const Matrix5c& a);

/// Element with column 2 equal to conj(s5)/|s5| when |s5|^2 >= 1/2, else
/// conj(s4)/|s4|.  Throws NotInGroup as above.
Sp2Element row_sign_candidate(const Matrix5c& a);

struct MinimizeResult {
    Sp2Element h;
    double value = 0.0;
};

/// Multistart local minimization of the plane functional over Sp(2),
/// parametrized by the 10-dimensional exponential chart recentred at the
/// current iterate.  Restart 0 starts at the identity, the rest at
/// uniform chart points.  Deterministic for a fixed seed and independent
/// of evaluation order.
MinimizeResult minimize_plane_functional(const FiveTuple& q, const Matrix5c& a,
                                         int restarts, std::uint64_t seed);

struct SignPoints {
    std::optional<Sp2Element> positive;  // functional value >= 0 here
    std::optional<Sp2Element> negative;  // functional value <= 0 here
    double positive_value = 0.0;
    double negative_value = 0.0;
};

/// Bracket points of the plane functional.  The analytic kernel and row
/// candidates are tried first; a missing sign is then searched for by
/// multistart minimization (or maximization) with `supplement_restarts`
/// starts.  Either optional may be absent when the corresponding sign is
/// never observed.
SignPoints find_sign_points(const FiveTuple& q, const Matrix5c& a,
                            std::uint64_t seed = 0x5eedULL, int supplement_restarts = 64);

struct ZeroPlaneReport {
    double column_residual = 0.0;    // fifth-column condition residual
    bool column_condition = false;   // |column_residual| <= tol
    std::optional<Sp2Element> zero_witness;
    double g_at_witness = 0.0;
    /// (negative point, positive point) used for bisection, when both exist.
    std::optional<std::pair<Sp2Element, Sp2Element>> bracket;
    /// Evidence (not proof) that the functional stays positive: the best
    /// minimum over the multistart search.
    std::optional<double> certified_positive_min;

    bool zero_plane_found() const { return column_condition || zero_witness.has_value(); }
};

/// Full zero-plane check at [A].  When the fifth-column residual is not
/// within tol, brackets the functional and bisects along the
/// one-parameter subgroup between the bracket points (retrying through a
/// random midpoint when the relative logarithm sits near a branch cut).
/// Throws InvalidInput when tol <= 0.
ZeroPlaneReport find_zero_plane(const FiveTuple& q, const Matrix5c& a, double tol = kZeroTol,
                                std::uint64_t seed = 0x5eedULL);

/// The distinguished base point of the open-set construction: cos(theta)
/// at (1,1) and (4,5), sin(theta) at (1,5), -sin(theta) at (4,1), ones at
/// (2,2), (3,4), (5,3) (1-based).  Requires q ordered so that q2,q3,q4>0,
/// q5<0, q1+q5<0, and sin(theta) < 1/(16 sqrt(max(q2,q3,q4))).
Matrix5c open_set_base_point(const FiveTuple& q, double theta);

/// Membership test for the neighborhood of the base point on which the
/// functional provably changes sign, with the per-condition breakdown.
struct NeighborhoodCheck {
    bool off_support_small = false;   // |B_ij| < 1/(16 sqrt(q_m)) off the support
    bool fifth_row_dominant = false;  // |s5|^2 > 7/8
    bool first_row_smaller = false;   // |s1| < |s5|
    bool identity_positive = false;   // functional at the identity > 0

    bool all() const {
        return off_support_small && fifth_row_dominant && first_row_smaller &&
               identity_positive;
    }
};

NeighborhoodCheck check_neighborhood(const FiveTuple& q, const Matrix5c& b);

struct OpenSetReport {
    std::size_t samples = 0;    // perturbations drawn
    std::size_t in_set = 0;     // of which landed in the neighborhood
    std::size_t verified = 0;   // of which passed every assertion
    double min_identity_value = 0.0;  // smallest functional value at the identity
    double max_start_value = 0.0;     // largest functional value at the row start point
    double max_witness_abs = 0.0;     // largest |functional| at a returned witness
};

/// Samples `n_samples` perturbations B = A0 * exp(1e-3 X) and, for every
/// B inside the neighborhood, asserts: functional positive at the
/// identity, negative at the row start point, a zero witness within tol,
/// the two-column row-mass bound per row, the scaled fifth-row entry
/// bound 1/(14 sqrt(q_m)), the 2/9 bound on the middle weighted terms,
/// and the (q1, q5) partial-sum margin.  Any failure throws
/// VerificationFailure carrying the serialized sample.
OpenSetReport verify_open_set(const FiveTuple& q, double theta, std::size_t n_samples,
                              std::uint64_t seed, double tol = kZeroTol);

}  // namespace bazaikin
