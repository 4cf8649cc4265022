#pragma once

#include "abcprat/cache.hpp"
#include "abcprat/factor.hpp"
#include "abcprat/ideal.hpp"
#include "abcprat/numerics.hpp"
#include "abcprat/quadfield.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace abcprat {

struct ScanOptions {
    FactorOptions factor;
    FactorCache* cache = nullptr;
    unsigned threads = 1;
};

enum class ScanStatus { Success, NoQualifyingPrime, Skipped };
enum class SkipReason { None, PhiCondition, PartialFactorization, HigherDegreePrime };

std::string_view to_string(ScanStatus s);
std::string_view to_string(SkipReason r);

/// One n of the Wieferich-ideal scan. All checks refer to v = u^k. For the
/// generic scan the chosen prime is (p, x - r) with r the root of the
/// minimal polynomial of v modulo p^2, stored in `hensel_root`.
struct ScanRecord {
    std::uint64_t n = 0;
    unsigned k = 1;
    bool phi_ok = false;
    mpz_class norm_phi; // |N(Phi_n(v))|
    FactorStatus factor_status = FactorStatus::Complete;
    std::optional<PrimeIdealAboveP> chosen;
    bool order_is_n = false;
    bool wieferich_ok = false;
    bool not_dividing_n = false;
    bool norm_bound_ok = false;
    ScanStatus status = ScanStatus::Skipped;
    SkipReason reason = SkipReason::None;
};

/// value <= gamma^n, decided exactly (gamma is a double, so gamma^n is
/// exactly representable at 53 n bits).
bool within_gamma_power(double gamma, std::uint64_t n, mpz_class const& value);
/// Smallest integer >= gamma^n.
mpz_class ceil_gamma_power(double gamma, std::uint64_t n);

/// Records for n = 1..n_max on v = u^k, k taken from the constants. For each
/// eligible n the candidates are the unramified P with v_P(Phi_n(v)) = 1 and
/// p not dividing n, in order of p and then Hensel root; the first with
/// order n, v^n != 1 mod P^2 and N(P) <= gamma^n is recorded.
std::vector<ScanRecord> wieferich_scan(QuadField const& F, QuadInt const& u, GrowthConstants const& constants,
                                       std::uint64_t n_max, ScanOptions const& opts = {});

/// Rational-prime version for an arbitrary unit: primes p not dividing
/// n * disc(f) that divide |Res(f, x^n - 1)| exactly once, where f is the
/// minimal polynomial of u^k; only degree-one primes are examined.
std::vector<ScanRecord> generic_unit_scan(AlgebraicUnit const& u, GrowthConstants const& constants,
                                          std::uint64_t n_max, ScanOptions const& opts = {});

struct CountReport {
    mpz_class X;
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
    std::uint64_t eligible_n = 0;
    std::uint64_t successes = 0;
    std::uint64_t distinct_rational_primes = 0;
    std::uint64_t lower_bound = 0; // ceil(successes / m)
    double c_hat = 0;              // successes / (m log X)
};

/// n1 = largest n with gamma^n <= X; counts over n in [n0, n1] with
/// 2 phi(n) >= n. Throws InsufficientRecords if the records stop before n1.
CountReport count_report(std::vector<ScanRecord> const& records, GrowthConstants const& constants, mpz_class const& X);

enum class Verdict { Excluded, PRational, NonPRational };
enum class ExclusionReason { None, DividesGroupOrder, Ramified, DividesClassNumber, BelowP0 };

std::string_view to_string(Verdict v);
std::string_view to_string(ExclusionReason r);

struct FermatWitness {
    PrimeIdealAboveP prime;
    Residue power; // eps^(N(P) - 1) mod P^2
    bool fermat_quotient_nonzero = false;
};

struct PRationalityVerdict {
    std::uint64_t p = 0;
    Verdict verdict = Verdict::Excluded;
    ExclusionReason reason = ExclusionReason::None;
    std::vector<FermatWitness> witnesses;
};

/// Verdict for one prime using the unit u (normally the fundamental unit).
/// Excluded: p = 2, p | disc, p | h, or p < p0. Otherwise PRational iff
/// u^(N(P) - 1) != 1 mod P^2 for some P | p.
PRationalityVerdict prationality_verdict(QuadField const& F, QuadInt const& u, std::uint64_t p);

/// All primes p <= X, ascending.
std::vector<PRationalityVerdict> prationality_scan(QuadField const& F, std::uint64_t X, ScanOptions const& opts = {},
                                                   std::optional<QuadInt> unit = std::nullopt);

/// Primes p <= X not dividing alpha with alpha^(p-1) = 1 mod p^2.
std::vector<std::uint64_t> rational_wieferich_scan(std::uint64_t alpha, std::uint64_t X);

} // namespace abcprat
