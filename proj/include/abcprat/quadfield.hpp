#pragma once

#include "abcprat/poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abcprat {

/// x + y*omega in the maximal order of Q(sqrt d), where omega = (1+sqrt d)/2
/// when d = 1 mod 4 and omega = sqrt d otherwise. The field is identified by
/// d; arithmetic between elements of different fields is rejected.
struct QuadInt {
    mpz_class x = 0;
    mpz_class y = 0;
    std::int64_t d = 0;

    QuadInt() = default;
    QuadInt(mpz_class x_, mpz_class y_, std::int64_t d_) : x(std::move(x_)), y(std::move(y_)), d(d_) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(QuadInt const& o) const { return d == o.d && x == o.x && y == o.y; }

    /// "x + y*w" style rendering; with sqrt notation when omega = sqrt d.
    std::string to_string() const;
};

QuadInt operator+(QuadInt const& a, QuadInt const& b);
QuadInt operator-(QuadInt const& a, QuadInt const& b);
QuadInt operator-(QuadInt const& a);
QuadInt operator*(QuadInt const& a, QuadInt const& b);

QuadInt quad_mul(QuadInt const& a, QuadInt const& b);
mpz_class quad_norm(QuadInt const& a);
mpz_class quad_trace(QuadInt const& a);
QuadInt quad_conj(QuadInt const& a);
QuadInt quad_pow(QuadInt const& a, unsigned long e);
/// Inverse of a unit (norm +-1).
QuadInt quad_unit_inverse(QuadInt const& u);
/// x^2 - Tr(a) x + N(a).
IntPoly quad_minpoly(QuadInt const& a);
/// f(a) evaluated exactly by Horner.
QuadInt quad_eval(IntPoly const& f, QuadInt const& a);

/// True iff d = 1 mod 4, i.e. omega = (1 + sqrt d)/2.
bool omega_is_half(std::int64_t d);
/// Minimal polynomial of omega: t^2 - t - (d-1)/4 or t^2 - d.
IntPoly omega_minpoly(std::int64_t d);

struct QuadField {
    std::int64_t d = 0;
    std::int64_t disc = 0;
    QuadInt fundamental_unit;
    int unit_norm = 0;
    std::uint64_t class_number = 0;
    bool class_number_supplied = false;

    QuadInt element(mpz_class x, mpz_class y) const { return {std::move(x), std::move(y), d}; }
    QuadInt one() const { return element(1, 0); }
    QuadInt omega() const { return element(0, 1); }
    /// "(1+sqrt(d))/2" or "sqrt(d)".
    std::string omega_label() const;

    /// Excluded-prime bound: max(3, largest prime dividing 2 * disc * h).
    std::uint64_t p0() const;
};

/// Largest d accepted without a supplied class number (disc <= 10^6).
inline constexpr std::int64_t max_class_number_disc = 1'000'000;

/// Builds Q(sqrt d): fundamental unit from the continued fraction of omega,
/// class number from the cycles of reduced indefinite forms.
QuadField make_field(std::int64_t d, std::optional<std::uint64_t> class_number_override = std::nullopt);

/// Smallest unit > 1 (first convergent of omega with unit norm).
QuadInt fundamental_unit(std::int64_t d);
/// Narrow class number h+(D) of primitive forms of discriminant D > 0
/// (nonsquare), counted as cycles of reduced forms.
std::uint64_t narrow_class_number(std::int64_t disc);

enum class Splitting { Split, Inert, Ramified };

std::string_view to_string(Splitting s);

/// A prime ideal P | p. For split p, P = (p, omega - r) with r the
/// Hensel-lifted root of omega's minimal polynomial mod p^2; the two primes
/// above p are listed in ascending order of r mod p.
struct PrimeIdealAboveP {
    mpz_class p;
    Splitting splitting = Splitting::Inert;
    int residue_degree = 2;
    mpz_class norm;
    mpz_class hensel_root; // mod p^2, meaningful iff Split

    bool operator==(PrimeIdealAboveP const& o) const {
        return p == o.p && splitting == o.splitting && hensel_root == o.hensel_root;
    }
    std::string label() const;
};

std::vector<PrimeIdealAboveP> split_prime(QuadField const& F, mpz_class const& p);
/// The other prime above a split p (identity for inert and ramified primes).
PrimeIdealAboveP conjugate_prime(QuadField const& F, PrimeIdealAboveP const& P);

/// Root of omega's minimal polynomial modulo p^k lifted from the root
/// r0 mod p of a split prime.
mpz_class hensel_lift(std::int64_t d, mpz_class const& r0, mpz_class const& p, unsigned k);

/// Image of an element of O_K in O_K / P^j for unramified P: for split P a
/// single class mod p^j (a), for inert P a pair a + b*omega mod p^j.
struct Residue {
    mpz_class a;
    mpz_class b;
    mpz_class modulus;
    std::int64_t d = 0;
    bool split = false;

    bool is_one() const { return a == 1 && b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(Residue const& o) const = default;
};

Residue reduce(QuadField const& F, QuadInt const& a, PrimeIdealAboveP const& P, unsigned j);
Residue residue_mul(Residue const& u, Residue const& v);
Residue residue_pow(Residue base, mpz_class const& e);

/// u^e in O_K / P^2. Ramified P is rejected.
Residue unit_pow_mod_p2(QuadField const& F, QuadInt const& u, mpz_class const& e, PrimeIdealAboveP const& P);

/// alpha in P^j, for unramified P.
bool in_prime_power(QuadField const& F, QuadInt const& alpha, PrimeIdealAboveP const& P, unsigned j);

/// Order of u in (O_K/P)^*, by factoring N(P) - 1 and descending through its
/// prime divisors.
mpz_class multiplicative_order(QuadField const& F, QuadInt const& u, PrimeIdealAboveP const& P);

/// True iff u has order exactly n in (O_K/P)^*; needs only the prime
/// divisors of n.
bool has_order(QuadField const& F, QuadInt const& u, PrimeIdealAboveP const& P, std::uint64_t n);

} // namespace abcprat
