#pragma once

#include "abcprat/poly.hpp"
#include "abcprat/real.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abcprat {

/// Disc D(center, radius) in C containing exactly one root of the minimal
/// polynomial and no other root. `real` is set when the disc is certified
/// to contain a real root, in which case the center lies on the real axis.
struct RootEnclosure {
    Complex center;
    Real radius;
    bool real = false;

    RootEnclosure(Complex c, Real r, bool is_real) : center(std::move(c)), radius(std::move(r)), real(is_real) {}

    Real modulus_lower() const;
    Real modulus_upper() const;
    /// +1 if |z| > 1 is certified, -1 if |z| < 1 is certified, 0 otherwise.
    int side_of_unit_circle() const;
};

/// An algebraic unit given by its monic integer minimal polynomial and
/// certified enclosures of all of its conjugates.
struct AlgebraicUnit {
    IntPoly minpoly;
    int degree = 0;
    std::vector<RootEnclosure> roots;
    std::string label;
    mpfr_prec_t precision = 0;
};

inline constexpr mpfr_prec_t default_precision_cap = 1 << 14;

/// Aberth iteration followed by inclusion discs of radius
/// m * |f(z)| / prod |z - z_j| (inflated by a rounding-error bound); the
/// precision doubles from 128 bits until the discs are pairwise disjoint and
/// every radius is below tol.
AlgebraicUnit certify_roots(IntPoly const& minpoly, double tol = 1e-30,
                            mpfr_prec_t precision_cap = default_precision_cap, std::string label = {});

enum class SMembership { Yes, No, Undecided };

std::string_view to_string(SMembership s);

/// No conjugate on the unit circle. Exact reciprocal-gcd and cyclotomic
/// pre-tests first, then the certified enclosures; enclosures that still
/// touch the circle are settled by a Sturm count on the trace polynomial of
/// the reciprocal part.
SMembership is_in_S(AlgebraicUnit const& u);

/// Exactly one conjugate outside the unit circle, real and > 1, all others
/// strictly inside. Throws NonConvergence if the enclosures cannot be
/// separated from the circle at the precision cap.
bool is_pisot(AlgebraicUnit const& u);

struct GrowthConstants {
    int degree = 0;       // m
    double a = 0;         // certified lower bound on the largest conjugate modulus
    double beta = 0;      // certified upper bound on all conjugate moduli of u
    unsigned k = 0;
    double beta_k = 0;    // upper bound on conjugate moduli of u^k
    double c = 0;         // |N(Phi_n(u^k))| >= exp(c n) when 2 phi(n) >= n
    double epsilon_max = 0;
    double epsilon = 0;   // the epsilon used for n0 (epsilon_max / 2)
    std::uint64_t n0 = 0;
    double gamma0 = 0;    // first-pass bound 2 * beta_k^m
    double gamma = 0;     // 2^(m/n0) * beta_k^m
};

/// Constants of the cyclotomic-norm lower bound for u in S. k is the least
/// positive integer with |tau(u)|^k <= 1/2 for conjugates inside the circle,
/// |tau(u)|^k >= 2 for those outside, and (a^k - 1) 2^(1-m) > 1.
GrowthConstants growth_constants(AlgebraicUnit const& u);

/// Enclosures re-certified at a smaller tolerance until every root is
/// certified on one side of the unit circle (requires is_in_S == Yes).
AlgebraicUnit separate_from_circle(AlgebraicUnit const& u);

/// Minimal polynomial of 1/u (reversed, made monic) and of -u.
IntPoly inverse_minpoly(IntPoly const& f);
IntPoly negated_minpoly(IntPoly const& f);

} // namespace abcprat
