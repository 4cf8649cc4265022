#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace abcprat {

class FactorCache;

enum class FactorStatus { Complete, Partial };

/// value = sign * cofactor * prod p^e. Every listed prime is certified;
/// cofactor is 1 when Complete, otherwise a composite with no prime factor
/// below the trial-division bound.
struct Factorization {
    mpz_class value;
    int sign = 1;
    std::vector<std::pair<mpz_class, unsigned>> factors; // ascending primes
    mpz_class cofactor = 1;
    FactorStatus status = FactorStatus::Complete;

    bool complete() const { return status == FactorStatus::Complete; }
    /// Exponent of p among the certified factors.
    unsigned exponent_of(mpz_class const& p) const;
};

struct FactorOptions {
    std::uint64_t trial_bound = 1'000'000;
    /// Pollard-rho iterations allowed per factor() call.
    std::uint64_t rho_budget = 50'000'000;
    std::uint64_t seed = 0;
};

/// Deterministic Miller-Rabin below 3.3e24 (first 13 prime bases);
/// 64 seeded random rounds above.
bool is_probable_prime(mpz_class const& n, std::uint64_t seed = 0);

/// Trial division, then Brent's variant of Pollard rho. Pure in
/// (N, options); the optional cache is consulted first and updated after.
Factorization factor(mpz_class const& n, FactorOptions const& opts = {}, FactorCache* cache = nullptr);

mpz_class powmod(mpz_class const& base, mpz_class const& exp, mpz_class const& mod);

/// Primes up to limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_squarefree_int(std::int64_t n);

/// Natural log of |n| for n != 0, valid beyond the double range.
double log_abs(mpz_class const& n);

} // namespace abcprat
