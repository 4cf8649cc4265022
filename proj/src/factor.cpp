#include "abcprat/factor.hpp"

#include "abcprat/cache.hpp"
#include "abcprat/error.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <map>
#include <mutex>

namespace abcprat {

unsigned Factorization::exponent_of(mpz_class const& p) const {
    for (auto const& [q, e] : factors)
        if (q == p)
            return e;
    return 0;
}

mpz_class powmod(mpz_class const& base, mpz_class const& exp, mpz_class const& mod) {
    if (exp < 0)
        throw Error(ErrorKind::InvalidArgument, "powmod with a negative exponent");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

bool is_squarefree_int(std::int64_t n) {
    if (n == 0)
        return false;
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0)
            return false;
        if (m % p == 0)
            m /= p;
    }
    return true;
}

namespace {

std::vector<std::uint64_t> const& small_primes() {
    static std::vector<std::uint64_t> const primes = primes_up_to(1'000'000);
    return primes;
}

bool miller_rabin_round(mpz_class const& n, mpz_class const& d, unsigned s, mpz_class const& a) {
    mpz_class x = powmod(a, d, n);
    mpz_class nm1 = n - 1;
    if (x == 1 || x == nm1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

// Brent's cycle detection on x -> x^2 + c mod n; returns a nontrivial
// divisor or 0 when the iteration budget runs out.
mpz_class brent_rho(mpz_class const& n, std::uint64_t seed, std::uint64_t& budget) {
    constexpr std::uint64_t batch = 128;
    for (std::uint64_t attempt = 0; budget > 0; ++attempt) {
        mpz_class c = (seed + 1 + attempt) % n;
        if (c == 0 || c == n - 2)
            continue;
        mpz_class y = 2, x, ys, q = 1, g = 1;
        std::uint64_t r = 1;
        auto step = [&](mpz_class& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                std::uint64_t lim = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    step(y);
                    mpz_class diff = x - y;
                    q = q * abs(diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
                budget = budget > lim ? budget - lim : 0;
            } while (k < r && g == 1 && budget > 0);
            r *= 2;
        } while (g == 1 && budget > 0);
        if (g == n || g == 0) {
            do {
                step(ys);
                mpz_class diff = x - ys;
                mpz_class ad = abs(diff);
                mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1 && g != 0)
            return g;
    }
    return 0;
}

} // namespace

bool is_probable_prime(mpz_class const& n, std::uint64_t seed) {
    if (n < 2)
        return false;
    static constexpr std::array<unsigned long, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long p : bases) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    mpz_class d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long a : bases)
        if (!miller_rabin_round(n, d, s, mpz_class(a)))
            return false;
    static mpz_class const deterministic_limit("3317044064679887385961981");
    if (n < deterministic_limit)
        return true;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed) + 17);
    mpz_class span = n - 3;
    for (int round = 0; round < 64; ++round) {
        mpz_class a = rng.get_z_range(span) + 2;
        if (!miller_rabin_round(n, d, s, a))
            return false;
    }
    return true;
}

Factorization factor(mpz_class const& n, FactorOptions const& opts, FactorCache* cache) {
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
    mpz_class magnitude = abs(n);
    int sign = n < 0 ? -1 : 1;
    if (cache) {
        if (auto hit = cache->lookup(magnitude)) {
            hit->value = n;
            hit->sign = sign;
            return *hit;
        }
    }

    Factorization out;
    out.value = n;
    out.sign = sign;
    std::map<mpz_class, unsigned> found;
    mpz_class m = magnitude;

    std::uint64_t bound = std::min<std::uint64_t>(opts.trial_bound, 1'000'000);
    for (std::uint64_t p : small_primes()) {
        if (p > bound)
            break;
        if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0)
            break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++found[mpz_class(p)];
        }
    }

    std::uint64_t budget = opts.rho_budget;
    std::vector<mpz_class> pending;
    if (m > 1)
        pending.push_back(m);
    mpz_class bound_sq = mpz_class(bound) * bound;
    while (!pending.empty()) {
        mpz_class c = pending.back();
        pending.pop_back();
        if (c == 1)
            continue;
        if (c < bound_sq || is_probable_prime(c, opts.seed)) {
            ++found[c];
            continue;
        }
        mpz_class d = brent_rho(c, opts.seed, budget);
        if (d == 0) {
            out.cofactor *= c;
            out.status = FactorStatus::Partial;
            continue;
        }
        pending.push_back(d);
        pending.push_back(c / d);
    }
    for (auto const& [p, e] : found)
        out.factors.emplace_back(p, e);
    if (cache && out.complete())
        cache->store(out);
    return out;
}

double log_abs(mpz_class const& n) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

} // namespace abcprat
