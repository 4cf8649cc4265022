#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace abcprat {

/// Dense polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly monomial(mpz_class const& c, int degree);
    static IntPoly constant(mpz_class const& c) { return monomial(c, 0); }
    /// x^n - 1
    static IntPoly x_pow_minus_one(unsigned n);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    mpz_class const& lc() const;
    /// Coefficient of x^i, zero beyond the degree.
    mpz_class coeff(int i) const;
    std::vector<mpz_class> const& coeffs() const { return coeffs_; }

    mpz_class eval(mpz_class const& x) const;
    IntPoly derivative() const;
    mpz_class content() const;
    IntPoly primitive_part() const;
    /// x^deg * f(1/x).
    IntPoly reversed() const;
    /// f(-x).
    IntPoly negated_argument() const;

    IntPoly operator-() const;
    IntPoly& operator+=(IntPoly const& o);
    IntPoly& operator-=(IntPoly const& o);
    IntPoly& operator*=(mpz_class const& c);

    friend IntPoly operator+(IntPoly a, IntPoly const& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, IntPoly const& b) { return a -= b; }
    friend IntPoly operator*(IntPoly const& a, IntPoly const& b);
    friend IntPoly operator*(IntPoly a, mpz_class const& c) { return a *= c; }
    friend bool operator==(IntPoly const& a, IntPoly const& b) = default;

    /// Human-readable form, e.g. "x^2 - 2*x - 1".
    std::string to_string(char var = 'x') const;

  private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

/// Quotient and remainder of a by b over Z. Requires lc(b) to divide every
/// leading coefficient met during the division (always true for monic b);
/// throws InvalidArgument otherwise.
struct PolyDivision {
    IntPoly quotient;
    IntPoly remainder;
};
PolyDivision divide(IntPoly const& a, IntPoly const& b);

/// a / b, throwing InvalidArgument unless the division is exact.
IntPoly exact_quotient(IntPoly const& a, IntPoly const& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b);

/// Phi_n, the n-th cyclotomic polynomial. Rejects n = 0.
IntPoly cyclotomic(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// All n <= limit with 2*phi(n) >= n, ascending.
std::vector<std::uint64_t> phi_half_sieve(std::uint64_t limit);

/// Resultant with the convention Res(f, g) = lc(g)^deg(f) * prod_{g(b)=0} f(b).
/// For monic g this is the norm-like product of f over the roots of g, so
/// resultant(h, f_u) = N(h(u)) when f_u is the minimal polynomial of u.
/// Differs from the Sylvester-matrix determinant by (-1)^(deg f * deg g).
mpz_class resultant(IntPoly const& f, IntPoly const& g);

/// Determinant of the Sylvester matrix of (f, g), computed by the
/// subresultant PRS.
mpz_class sylvester_resultant(IntPoly const& f, IntPoly const& g);

/// Greatest common divisor over Q, scaled to a primitive integer polynomial
/// with positive leading coefficient. gcd(0, 0) is rejected.
IntPoly poly_gcd(IntPoly const& f, IntPoly const& g);

bool is_squarefree(IntPoly const& f);

/// Sturm count of distinct real roots of a squarefree f in the half-open
/// interval (lo, hi].
int count_real_roots(IntPoly const& f, mpz_class const& lo, mpz_class const& hi);

/// prod over roots a of the monic f of (x - a^k), the characteristic
/// polynomial of u^k. Obtained from Res_y(f(y), x - y^k) by evaluation at
/// deg f + 1 integer points and exact Newton interpolation.
IntPoly power_charpoly(IntPoly const& f, unsigned k);

/// Distinct roots of f modulo the prime p, ascending. Cantor-Zassenhaus
/// with a deterministic seed.
std::vector<mpz_class> roots_mod_p(IntPoly const& f, mpz_class const& p, std::uint64_t seed = 0);

} // namespace abcprat
