#include "bazaikin/zero_plane.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "bazaikin/errors.hpp"

namespace bazaikin {

namespace {

using Matrix54c = Eigen::Matrix<Complex, 5, 4>;

/// The weighted column-energy functional at a fixed base matrix, in a
/// form that avoids building 5x5 products: only columns 2 and 4 of the
/// embedded group element enter, and their fifth entries vanish.
struct Functional {
    Matrix54c a4;
    std::array<double, 5> w{};

    Functional(const FiveTuple& q, const Matrix5c& a) {
        a4 = a.leftCols<4>();
        for (int i = 0; i < 5; ++i) w[i] = static_cast<double>(q[i]);
    }

    Functional negated() const {
        Functional f = *this;
        for (double& v : f.w) v = -v;
        return f;
    }

    double eval_cols(const Vector4c& h2, const Vector4c& h4) const {
        const Eigen::Matrix<Complex, 5, 1> w2 = a4 * h2;
        const Eigen::Matrix<Complex, 5, 1> w4 = a4 * h4;
        double g = 0.0;
        for (int l = 0; l < 5; ++l) g += w[l] * (std::norm(w2(l)) + std::norm(w4(l)));
        return g;
    }

    double eval_embedded(const Matrix4c& h) const { return eval_cols(h.col(1), h.col(3)); }

    double eval(const Sp2Element& e) const { return eval_cols(column2(e), column4(e)); }
};

struct TangentBasis {
    std::array<Matrix4c, 10> e;
    std::array<Matrix4c, 10> e_sq;
    TangentBasis() {
        for (int k = 0; k < 10; ++k) {
            Sp2Tangent t{};
            t[k] = 1.0;
            e[k] = sp2_tangent_matrix(t);
            e_sq[k] = e[k] * e[k];
        }
    }
};

const TangentBasis& tangent_basis() {
    static const TangentBasis b;
    return b;
}

// Every unit basis direction satisfies E^3 = -E, so the exponential has
// the closed form I + sin(t) E + (1 - cos(t)) E^2.
Matrix4c exp_basis(int k, double t) {
    const TangentBasis& b = tangent_basis();
    return Matrix4c::Identity() + std::sin(t) * b.e[k] + (1.0 - std::cos(t)) * b.e_sq[k];
}

/// exp(tX) for fixed skew-Hermitian X, factored once.
struct TangentExp {
    Matrix4c vec;
    Eigen::Vector4d lam;

    explicit TangentExp(const Matrix4c& x) {
        const Eigen::SelfAdjointEigenSolver<Matrix4c> es(Complex(0.0, -1.0) * x);
        vec = es.eigenvectors();
        lam = es.eigenvalues();
    }

    Matrix4c at(double t) const {
        Matrix4c d = Matrix4c::Zero();
        for (int k = 0; k < 4; ++k) d(k, k) = std::exp(Complex(0.0, t * lam(k)));
        return vec * d * vec.adjoint();
    }
};

double descend(const Functional& f, Matrix4c& h, double value, int max_iters) {
    constexpr double probe = 1e-5;
    double step = 0.25;
    for (int iter = 0; iter < max_iters; ++iter) {
        Eigen::Matrix<double, 10, 1> grad;
        for (int k = 0; k < 10; ++k) {
            const double fp = f.eval_embedded(h * exp_basis(k, probe));
            const double fm = f.eval_embedded(h * exp_basis(k, -probe));
            grad(k) = (fp - fm) / (2.0 * probe);
        }
        const double gnorm_sq = grad.squaredNorm();
        if (gnorm_sq < 1e-18) break;

        Sp2Tangent dir{};
        for (int k = 0; k < 10; ++k) dir[k] = -grad(k);
        const TangentExp texp(sp2_tangent_matrix(dir));

        double t = std::min(step * 2.0, 2.0 / std::sqrt(gnorm_sq));
        bool moved = false;
        for (int back = 0; back < 40; ++back) {
            const Matrix4c trial = h * texp.at(t);
            const double trial_value = f.eval_embedded(trial);
            if (trial_value <= value - 0.3 * t * gnorm_sq) {
                h = trial;
                value = trial_value;
                step = t;
                moved = true;
                break;
            }
            t *= 0.5;
        }
        if (!moved) break;
    }
    return value;
}

MinimizeResult minimize_impl(const Functional& f, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw InvalidInput("restarts must be at least 1");
    Matrix4c best_h = Matrix4c::Identity();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < restarts; ++i) {
        Matrix4c h;
        if (i == 0) {
            h = Matrix4c::Identity();
        } else {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
            Sp2Tangent t{};
            for (double& v : t) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
            h = exp_skew_hermitian(sp2_tangent_matrix(t));
        }
        const double value = descend(f, h, f.eval_embedded(h), 100);
        if (value < best) {
            best = value;
            best_h = h;
        }
    }
    return {sp2_from_blocks(best_h), best};
}

Matrix4c embedded_block(const Sp2Element& e) {
    return embed_sp2(e).block<4, 4>(0, 0);
}

void validate_open_set_tuple(const FiveTuple& q) {
    if (!(q[1] > 0 && q[2] > 0 && q[3] > 0)) {
        throw InvalidInput("q2, q3, q4 must be positive (after reordering)");
    }
    if (!(q[4] < 0)) throw InvalidInput("q5 must be negative (after reordering)");
    if (!(q[0] + q[4] < 0)) throw InvalidInput("q1 + q5 must be negative (after reordering)");
}

double max_middle(const FiveTuple& q) {
    return static_cast<double>(std::max({q[1], q[2], q[3]}));
}

constexpr std::array<std::pair<int, int>, 5> kSupport{{{0, 0}, {1, 1}, {2, 3}, {3, 4}, {4, 2}}};

}  // namespace

double fifth_column_residual(const FiveTuple& q, const Matrix5c& a) {
    double acc = 0.0;
    for (int l = 0; l < 5; ++l) {
        acc += static_cast<double>(q[l]) * (1.0 - std::norm(a(l, 4)));
    }
    return acc;
}

double plane_functional(const FiveTuple& q, const Matrix5c& a, const Sp2Element& h) {
    return Functional(q, a).eval(h);
}

Sp2Element kernel_sign_candidate(const Matrix5c& a) {
    const Vector4c s5 = row_slice(a, 4);
    if (s5.norm() < 1e-12 && row_slice(a, 3).norm() < 1e-12) {
        throw NotInGroup("rows 4 and 5 have no mass outside the last column");
    }

    // Real 4x8 system in the re/im parts of the column-2 value v:
    // s5 . v = 0   and   s5 . col4(v) = 0.
    Eigen::Matrix<double, 4, 8> m;
    for (int k = 0; k < 4; ++k) {
        for (int part = 0; part < 2; ++part) {
            Vector4c basis = Vector4c::Zero();
            basis(k) = part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
            const Complex f1 = bilinear_dot(s5, basis);
            const Complex f2 = bilinear_dot(s5, column4_from_column2(basis));
            const int col = 2 * k + part;
            m(0, col) = f1.real();
            m(1, col) = f1.imag();
            m(2, col) = f2.real();
            m(3, col) = f2.imag();
        }
    }

    std::array<int, 4> pivot_col{-1, -1, -1, -1};
    std::array<bool, 8> used{};
    int rank = 0;
    for (int stage = 0; stage < 4; ++stage) {
        int best_col = -1, best_row = -1;
        double best = 1e-12;
        for (int c = 0; c < 8; ++c) {
            if (used[c]) continue;
            for (int r = rank; r < 4; ++r) {
                if (std::abs(m(r, c)) > best) {
                    best = std::abs(m(r, c));
                    best_col = c;
                    best_row = r;
                }
            }
        }
        if (best_col < 0) break;
        m.row(rank).swap(m.row(best_row));
        used[best_col] = true;
        pivot_col[rank] = best_col;
        m.row(rank) /= m(rank, best_col);
        for (int r = 0; r < 4; ++r) {
            if (r != rank) m.row(r) -= m(r, best_col) * m.row(rank);
        }
        ++rank;
    }

    int free_col = 0;
    while (used[free_col]) ++free_col;  // rank <= 4 < 8 guarantees one exists
    Eigen::Matrix<double, 8, 1> u = Eigen::Matrix<double, 8, 1>::Zero();
    u(free_col) = 1.0;
    for (int r = 0; r < rank; ++r) u(pivot_col[r]) = -m(r, free_col);

    Vector4c v;
    for (int k = 0; k < 4; ++k) v(k) = Complex(u(2 * k), u(2 * k + 1));
    v /= v.norm();
    return sp2_from_column(v);
}

Sp2Element row_sign_candidate(const Matrix5c& a) {
    const Vector4c s5 = row_slice(a, 4);
    const Vector4c s4 = row_slice(a, 3);
    const double n5 = s5.norm();
    const double n4 = s4.norm();
    if (n5 < 1e-12 && n4 < 1e-12) {
        throw NotInGroup("rows 4 and 5 have no mass outside the last column");
    }
    const bool use5 = n5 * n5 >= 0.5;
    const Vector4c& s = use5 ? s5 : s4;
    const double n = use5 ? n5 : n4;
    if (n < 1e-12) throw NotInGroup("degenerate row slice");
    return sp2_from_column(Vector4c(s.conjugate() / n));
}

MinimizeResult minimize_plane_functional(const FiveTuple& q, const Matrix5c& a, int restarts,
                                         std::uint64_t seed) {
    return minimize_impl(Functional(q, a), restarts, seed);
}

SignPoints find_sign_points(const FiveTuple& q, const Matrix5c& a, std::uint64_t seed,
                            int supplement_restarts) {
    const Functional f(q, a);
    SignPoints out;

    const std::array<Sp2Element, 3> candidates{kernel_sign_candidate(a), row_sign_candidate(a),
                                               sp2_identity()};
    for (const Sp2Element& cand : candidates) {
        const double v = f.eval(cand);
        if (!out.positive && v >= 0.0) {
            out.positive = cand;
            out.positive_value = v;
        }
        if (!out.negative && v <= 0.0) {
            out.negative = cand;
            out.negative_value = v;
        }
    }
    if (!out.negative && supplement_restarts > 0) {
        const MinimizeResult m = minimize_impl(f, supplement_restarts, derive_seed(seed, 0xA));
        if (m.value <= 0.0) {
            out.negative = m.h;
            out.negative_value = m.value;
        }
    }
    if (!out.positive && supplement_restarts > 0) {
        const MinimizeResult m =
            minimize_impl(f.negated(), supplement_restarts, derive_seed(seed, 0xB));
        if (m.value <= 0.0) {
            out.positive = m.h;
            out.positive_value = -m.value;
        }
    }
    return out;
}

ZeroPlaneReport find_zero_plane(const FiveTuple& q, const Matrix5c& a, double tol,
                                std::uint64_t seed) {
    if (tol <= 0.0) throw InvalidInput("tol must be positive");
    if (!is_admissible_up_to_sign(q)) throw InvalidTuple("not admissible: " + to_string(q));
    if (!is_special_unitary(a)) {
        throw NotInGroup("matrix fails SU(5) membership at tolerance " +
                         std::to_string(kGroupTol));
    }

    ZeroPlaneReport rep;
    rep.column_residual = fifth_column_residual(q, a);
    rep.column_condition = std::abs(rep.column_residual) <= tol;
    if (rep.column_condition) return rep;

    const Functional f(q, a);
    SignPoints sp = find_sign_points(q, a, derive_seed(seed, 1));

    if (sp.positive && std::abs(sp.positive_value) <= tol &&
        (!sp.negative || std::abs(sp.positive_value) <= std::abs(sp.negative_value))) {
        rep.zero_witness = sp.positive;
        rep.g_at_witness = sp.positive_value;
        return rep;
    }
    if (sp.negative && std::abs(sp.negative_value) <= tol) {
        rep.zero_witness = sp.negative;
        rep.g_at_witness = sp.negative_value;
        return rep;
    }

    if (sp.positive && sp.negative) {
        rep.bracket = std::make_pair(*sp.negative, *sp.positive);
        Sp2Element lo = *sp.negative;
        Sp2Element hi = *sp.positive;
        for (int attempt = 0; attempt < 8; ++attempt) {
            const Matrix4c lo4 = embedded_block(lo);
            const Matrix4c w = lo4.adjoint() * embedded_block(hi);
            Matrix4c x;
            if (principal_log_unitary(w, x)) {
                x = project_to_sp2_algebra(x);
                const TangentExp texp(x);
                double t_lo = 0.0, t_hi = 1.0;
                for (int it = 0; it < 300; ++it) {
                    const double mid = 0.5 * (t_lo + t_hi);
                    const Matrix4c hm = lo4 * texp.at(mid);
                    const double v = f.eval_embedded(hm);
                    if (std::abs(v) <= tol) {
                        rep.zero_witness = sp2_from_blocks(hm);
                        rep.g_at_witness = v;
                        return rep;
                    }
                    (v > 0.0 ? t_hi : t_lo) = mid;
                }
                throw InternalInvariantViolation("bisection failed to certify a zero");
            }
            // The relative logarithm sits near a branch cut: route the
            // path through a random midpoint instead.
            const Sp2Element mid = random_sp2(derive_seed(seed, 50 + attempt));
            const double vm = f.eval(mid);
            if (std::abs(vm) <= tol) {
                rep.zero_witness = mid;
                rep.g_at_witness = vm;
                return rep;
            }
            (vm > 0.0 ? hi : lo) = mid;
        }
        throw InternalInvariantViolation("could not route a path between bracket points");
    }

    if (sp.positive && !sp.negative) {
        const MinimizeResult m = minimize_plane_functional(q, a, 128, derive_seed(seed, 2));
        if (m.value > tol) {
            rep.certified_positive_min = m.value;
        } else if (std::abs(m.value) <= tol) {
            rep.zero_witness = m.h;
            rep.g_at_witness = m.value;
        } else {
            rep.bracket = std::make_pair(m.h, *sp.positive);
            // A negative value surfaced after all: recurse once with the
            // fresh bracket by retrying the whole search.
            return find_zero_plane(q, a, tol, derive_seed(seed, 3));
        }
    }
    return rep;
}

Matrix5c open_set_base_point(const FiveTuple& q, double theta) {
    validate_open_set_tuple(q);
    if (!(theta > 0.0 && theta < std::numbers::pi / 2)) {
        throw InvalidInput("theta must be in (0, pi/2)");
    }
    const double qm = max_middle(q);
    if (!(std::sin(theta) < 1.0 / (16.0 * std::sqrt(qm)))) {
        throw InvalidInput("sin(theta) must be below 1/(16*sqrt(q_m))");
    }
    Matrix5c m = Matrix5c::Zero();
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    m(0, 0) = c;
    m(0, 4) = s;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 0) = -s;
    m(3, 4) = c;
    m(4, 2) = 1.0;
    return m;
}

NeighborhoodCheck check_neighborhood(const FiveTuple& q, const Matrix5c& b) {
    validate_open_set_tuple(q);
    NeighborhoodCheck c;
    const double bound = 1.0 / (16.0 * std::sqrt(max_middle(q)));
    c.off_support_small = true;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const bool on_support =
                std::any_of(kSupport.begin(), kSupport.end(),
                            [&](const auto& p) { return p.first == i && p.second == j; });
            if (!on_support && std::abs(b(i, j)) >= bound) c.off_support_small = false;
        }
    }
    const double n5_sq = row_slice(b, 4).squaredNorm();
    c.fifth_row_dominant = n5_sq > 7.0 / 8.0;
    c.first_row_smaller = row_slice(b, 0).squaredNorm() < n5_sq;
    c.identity_positive = plane_functional(q, b, sp2_identity()) > 0.0;
    return c;
}

OpenSetReport verify_open_set(const FiveTuple& q, double theta, std::size_t n_samples,
                              std::uint64_t seed, double tol) {
    if (!is_admissible_up_to_sign(q)) throw InvalidTuple("not admissible: " + to_string(q));
    const Matrix5c a0 = open_set_base_point(q, theta);
    if (!check_neighborhood(q, a0).all()) {
        throw VerificationFailure("base point fails its own neighborhood conditions: " +
                                  serialize_matrix(a0));
    }

    const double qm = max_middle(q);
    const double entry_bound = 1.0 / (14.0 * std::sqrt(qm));
    constexpr double eps = 1e-3;
    constexpr double slack = 1e-12;

    OpenSetReport rep;
    rep.samples = n_samples;
    rep.min_identity_value = std::numeric_limits<double>::infinity();
    rep.max_start_value = -std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < n_samples; ++i) {
        Rng rng(derive_seed(seed, i));
        const Matrix5c x = random_su5_tangent(rng);
        const Matrix5c b = a0 * exp_skew_hermitian(Matrix5c(eps * x));
        if (!check_neighborhood(q, b).all()) continue;
        ++rep.in_set;

        auto fail = [&](const std::string& what) {
            throw VerificationFailure(what + " (sample " + std::to_string(i) + "): " +
                                      serialize_matrix(b));
        };

        const Functional f(q, b);
        const double f_id = f.eval(sp2_identity());
        if (!(f_id > 0.0)) fail("functional at the identity is not positive");

        const Vector4c s5 = row_slice(b, 4);
        const Sp2Element h0 = sp2_from_column(Vector4c(s5.conjugate() / s5.norm()));
        const double f_h0 = f.eval(h0);
        if (!(f_h0 < 0.0)) fail("functional at the row start point is not negative");

        const Vector4c h2 = column2(h0);
        const Vector4c h4 = column4(h0);
        std::array<double, 5> mass{};
        for (int l = 0; l < 5; ++l) {
            const Vector4c sl = row_slice(b, l);
            mass[l] = std::norm(bilinear_dot(sl, h2)) + std::norm(bilinear_dot(sl, h4));
            if (mass[l] > sl.squaredNorm() + slack) {
                fail("two-column mass exceeds the row mass at row " + std::to_string(l + 1));
            }
        }
        for (int j : {0, 1, 3}) {
            if (std::abs(b(4, j)) / s5.norm() > entry_bound + slack) {
                fail("scaled fifth-row entry exceeds its bound at column " +
                     std::to_string(j + 1));
            }
        }
        for (int l : {1, 2, 3}) {
            if (mass[l] * static_cast<double>(q[l]) > 2.0 / 9.0 + slack) {
                fail("middle weighted term exceeds 2/9 at row " + std::to_string(l + 1));
            }
        }
        const double partial = mass[0] * static_cast<double>(q[0]) +
                               mass[4] * static_cast<double>(q[4]);
        if (!(partial < -2.0 / 3.0)) fail("outer partial sum does not clear -2/3");
        if (q[0] > 0 && !(partial < -7.0 / 4.0)) {
            fail("outer partial sum does not clear -7/4 with positive q1");
        }

        const ZeroPlaneReport zp = find_zero_plane(q, b, tol, derive_seed(seed, (1ULL << 32) + i));
        if (!zp.zero_plane_found()) fail("no zero witness found");

        rep.min_identity_value = std::min(rep.min_identity_value, f_id);
        rep.max_start_value = std::max(rep.max_start_value, f_h0);
        if (zp.zero_witness) {
            rep.max_witness_abs = std::max(rep.max_witness_abs, std::abs(zp.g_at_witness));
        }
        ++rep.verified;
    }

    if (rep.in_set == 0) {
        throw VerificationFailure("no perturbation landed in the neighborhood");
    }
    return rep;
}

}  // namespace bazaikin
