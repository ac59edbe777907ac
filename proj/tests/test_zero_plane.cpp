#include <doctest.h>

#include <cmath>
#include <vector>

#include "bazaikin/curvature.hpp"
#include "bazaikin/zero_plane.hpp"

using namespace bazaikin;

namespace {

double column_mass(const Matrix5c& m, int row) {
    return std::norm(m(row, 1)) + std::norm(m(row, 3));
}

}  // namespace

TEST_CASE("fifth-column residual at the identity") {
    const Matrix5c identity = Matrix5c::Identity();
    CHECK(fifth_column_residual({1, 1, 1, -1, -3}, identity) == 2.0);
    CHECK(fifth_column_residual({7, 1, -3, 1, -3}, identity) == 6.0);
}

TEST_CASE("fifth-column residual at the open-set base point") {
    const FiveTuple q{-3, 7, 1, 1, -3};
    for (double theta : {0.005, 0.01, 0.02}) {
        const Matrix5c a0 = open_set_base_point(q, theta);
        const double expected = 2.0 + 4.0 * std::sin(theta) * std::sin(theta);
        CHECK(fifth_column_residual(q, a0) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("plane functional at the identity picks the middle weights") {
    const Matrix5c identity = Matrix5c::Identity();
    CHECK(plane_functional({7, 1, -3, 1, -3}, identity, sp2_identity()) == 2.0);
    CHECK(plane_functional({1, 1, 1, -1, -3}, identity, sp2_identity()) == 0.0);
}

TEST_CASE("plane functional rewrite for the exceptional weights") {
    const FiveTuple q{1, 1, 1, -1, -3};
    for (int i = 0; i < 100; ++i) {
        const Matrix5c a = random_su5(derive_seed(61, i));
        const Sp2Element h = random_sp2(derive_seed(62, i));
        const Matrix5c m = a * embed_sp2(h);
        const double direct = plane_functional(q, a, h);
        const double rewritten = 2.0 - 2.0 * column_mass(m, 3) - 4.0 * column_mass(m, 4);
        CHECK(std::abs(direct - rewritten) <= 1e-12);
    }
}

TEST_CASE("plane functional is invariant under the circle action") {
    const FiveTuple q{1, 1, 1, -1, -3};
    Rng rng(63);
    for (int i = 0; i < 100; ++i) {
        const Matrix5c a = random_su5(derive_seed(64, i));
        const Sp2Element h = random_sp2(derive_seed(65, i));
        const double phi = rng.uniform(0.0, 6.28318530717958647692);
        Matrix5c twisted = a;
        for (int l = 0; l < 5; ++l) {
            twisted.row(l) *= std::exp(Complex(0.0, phi * static_cast<double>(q[l])));
        }
        CHECK(std::abs(plane_functional(q, twisted, h) - plane_functional(q, a, h)) <= 1e-12);
    }
}

TEST_CASE("two-column mass never exceeds the row mass") {
    for (int i = 0; i < 100000; ++i) {
        const Matrix5c a = random_su5(derive_seed(66, i));
        const Sp2Element h = random_sp2(derive_seed(67, i));
        const Matrix5c m = a * embed_sp2(h);
        for (int row = 0; row < 5; ++row) {
            const double mass = column_mass(m, row);
            const double row_mass = row_slice(a, row).squaredNorm();
            CHECK(mass <= row_mass + 1e-12);
        }
    }
}

TEST_CASE("sign candidates bracket the exceptional functional everywhere") {
    const FiveTuple q{1, 1, 1, -1, -3};
    for (int i = 0; i < 100; ++i) {
        const Matrix5c a = random_su5(derive_seed(68, i));
        const Sp2Element up = kernel_sign_candidate(a);
        const Sp2Element down = row_sign_candidate(a);
        CHECK(plane_functional(q, a, up) >= -1e-10);
        CHECK(plane_functional(q, a, down) <= 1e-10);

        // The kernel construction annihilates the fifth-row slice.
        const Matrix5c m = a * embed_sp2(up);
        CHECK(column_mass(m, 4) <= 1e-20);
    }
}

TEST_CASE("find_sign_points on landmark cases") {
    const Matrix5c identity = Matrix5c::Identity();

    for (int i = 0; i < 20; ++i) {
        const SignPoints sp = find_sign_points({1, 1, 1, -1, -3},
                                               random_su5(derive_seed(69, i)));
        REQUIRE(sp.positive.has_value());
        REQUIRE(sp.negative.has_value());
        CHECK(sp.positive_value >= 0.0);
        CHECK(sp.negative_value <= 0.0);
    }

    const SignPoints qp = find_sign_points({7, 1, -3, 1, -3}, identity);
    REQUIRE(qp.positive.has_value());
    CHECK_FALSE(qp.negative.has_value());
}

TEST_CASE("minimization finds the flat directions") {
    const Matrix5c identity = Matrix5c::Identity();

    const MinimizeResult flat = minimize_plane_functional({1, 1, 1, -1, -3}, identity, 8, 42);
    CHECK(flat.value <= kZeroTol);
    CHECK(flat.value >= -kZeroTol);

    const MinimizeResult positive = minimize_plane_functional({7, 1, -3, 1, -3}, identity, 32, 42);
    CHECK(positive.value > 0.5);
    CHECK(positive.value == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(std::abs(plane_functional({7, 1, -3, 1, -3}, identity, positive.h) - positive.value) <=
          1e-12);

    // The minimizer never undershoots a dense random sample.
    double sampled_min = 1e300;
    for (int i = 0; i < 20000; ++i) {
        const double v =
            plane_functional({7, 1, -3, 1, -3}, identity, random_sp2(derive_seed(70, i)));
        sampled_min = std::min(sampled_min, v);
    }
    CHECK(positive.value <= sampled_min + kZeroTol);
}

TEST_CASE("zero plane search on the exceptional tuple") {
    const FiveTuple q{1, 1, 1, -1, -3};
    const Matrix5c identity = Matrix5c::Identity();

    const ZeroPlaneReport at_identity = find_zero_plane(q, identity);
    CHECK(at_identity.zero_plane_found());

    for (int i = 0; i < 25; ++i) {
        const ZeroPlaneReport rep = find_zero_plane(q, random_su5(derive_seed(71, i)));
        REQUIRE(rep.zero_plane_found());
        if (rep.zero_witness) {
            CHECK(std::abs(rep.g_at_witness) <= kZeroTol);
            CHECK(sp2_residual(*rep.zero_witness) <= kGroupTol);
            CHECK(std::abs(plane_functional(q, random_su5(derive_seed(71, i)), *rep.zero_witness) -
                           rep.g_at_witness) <= 1e-12);
        }
    }
}

TEST_CASE("zero plane search certifies absence for the quasi-positive witness") {
    const FiveTuple q{7, 1, -3, 1, -3};
    const ZeroPlaneReport rep = find_zero_plane(q, Matrix5c::Identity());
    CHECK_FALSE(rep.zero_plane_found());
    CHECK(rep.column_residual == 6.0);
    REQUIRE(rep.certified_positive_min.has_value());
    CHECK(*rep.certified_positive_min > 0.5);
}

TEST_CASE("zero plane search rejects bad input") {
    CHECK_THROWS_AS((void)find_zero_plane({1, 1, 1, -1, -3}, Matrix5c::Identity(), 0.0),
                    InvalidInput);
    CHECK_THROWS_AS((void)find_zero_plane({1, 1, 1, -1, -1}, Matrix5c::Identity()),
                    InvalidTuple);
    CHECK_THROWS_AS((void)find_zero_plane({1, 1, 1, -1, -3}, Matrix5c::Zero()), NotInGroup);
}

TEST_CASE("open-set base point") {
    const FiveTuple q{-3, 7, 1, 1, -3};

    const Matrix5c a0 = open_set_base_point(q, 0.02);
    CHECK(is_special_unitary(a0, 1e-14));
    CHECK(determinant_residual(a0) <= 1e-14);
    CHECK(check_neighborhood(q, a0).all());

    // Tiny angles approach a permutation matrix with determinant one.
    const Matrix5c near_permutation = open_set_base_point(q, 1e-9);
    Matrix5c p = Matrix5c::Zero();
    p(0, 0) = p(1, 1) = p(2, 3) = p(3, 4) = p(4, 2) = 1.0;
    CHECK((near_permutation - p).cwiseAbs().maxCoeff() <= 2e-9);

    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const double theta = rng.uniform(1e-4, 0.0236);
        const Matrix5c m = open_set_base_point(q, theta);
        CHECK(unitarity_residual(m) <= 1e-14);
        CHECK(determinant_residual(m) <= 1e-14);
    }

    CHECK_THROWS_AS((void)open_set_base_point(q, 0.1), InvalidInput);    // angle too large
    CHECK_THROWS_AS((void)open_set_base_point(q, 0.0), InvalidInput);
    CHECK_THROWS_AS((void)open_set_base_point({7, 1, 1, -3, -3}, 0.02), InvalidInput);
}

TEST_CASE("neighborhood membership") {
    const FiveTuple q{-3, 7, 1, 1, -3};
    const Matrix5c a0 = open_set_base_point(q, 0.02);

    CHECK(check_neighborhood(q, a0).all());
    const NeighborhoodCheck at_identity = check_neighborhood(q, Matrix5c::Identity());
    CHECK_FALSE(at_identity.off_support_small);
    CHECK_FALSE(at_identity.all());

    // Small perturbations stay inside.
    for (int i = 0; i < 100; ++i) {
        Rng rng(derive_seed(72, i));
        const Matrix5c b = a0 * exp_skew_hermitian(Matrix5c(1e-3 * random_su5_tangent(rng)));
        CAPTURE(i);
        CHECK(check_neighborhood(q, b).all());
    }
}

TEST_CASE("open-set verification passes on the two known inputs") {
    const OpenSetReport a = verify_open_set({-3, 7, 1, 1, -3}, 0.02, 10, 42);
    CHECK(a.in_set == a.verified);
    CHECK(a.in_set > 0);
    CHECK(a.min_identity_value > 0.0);
    CHECK(a.max_start_value < 0.0);
    CHECK(a.max_witness_abs <= kZeroTol);

    const OpenSetReport b = verify_open_set({-1, 1, 1, 1, -3}, 0.02, 10, 42);
    CHECK(b.in_set == b.verified);
    CHECK(b.in_set > 0);
}

TEST_CASE("open-set verification rejects unordered tuples") {
    CHECK_THROWS_AS((void)verify_open_set({1, 1, 1, 1, -1}, 0.02, 4, 42), InvalidInput);
}

TEST_CASE("exact verdicts and the numeric checks corroborate each other") {
    // A same-sign reordering puts the identity coset out of reach of both
    // zero-plane conditions exactly when the verdict is above NN.
    const std::vector<FiveTuple> tuples{{1, 1, 1, 1, 1},   {1, 1, 1, 1, -1},
                                        {7, 1, -3, 1, -3}, {3, 1, 1, -3, -3},
                                        {7, 1, 1, -3, -3}, {1, 1, 1, -1, -3}};
    const Matrix5c identity = Matrix5c::Identity();
    for (const FiveTuple& q : tuples) {
        const bool exceptional = classify(q) == CurvatureClass::NonNegativeOnly;
        const auto witness = same_sign_witness(q);
        REQUIRE(witness.has_value() == !exceptional);
        if (exceptional) continue;
        const auto [a, b, c, d] = *witness;
        FiveTuple r{q[a], q[c], q[b], q[d], 0};
        for (int i = 0; i < 5; ++i) {
            if (i != a && i != b && i != c && i != d) r[4] = q[i];
        }
        if (r[0] + r[2] < 0) {
            for (auto& v : r.q) v = -v;  // same space, positive pair sums
        }
        CAPTURE(to_string(r));
        const ZeroPlaneReport rep = find_zero_plane(r, identity);
        CHECK_FALSE(rep.zero_plane_found());
        REQUIRE(rep.certified_positive_min.has_value());
        CHECK(*rep.certified_positive_min > 0.0);
    }
}
