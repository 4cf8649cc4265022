#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond GMP: polynomials are plain coefficient vectors, field
// elements are (A + B sqrt d)/2.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Poly = std::vector<mpz_class>; // ascending

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline Poly mul(Poly const& a, Poly const& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// a / b for monic b, assuming exact division
inline Poly div_monic(Poly a, Poly const& b) {
    std::size_t db = b.size() - 1;
    if (a.size() < b.size())
        return {};
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        mpz_class c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    return q;
}

inline Poly x_pow_minus_one(std::uint64_t n) {
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    return p;
}

inline int mobius(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q)
            continue;
        n /= q;
        if (n % q == 0)
            return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

// prod_{d | n} (x^(n/d) - 1)^mu(d)
inline Poly cyclotomic(std::uint64_t n) {
    Poly num{1}, den{1};
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d)
            continue;
        int mu = mobius(d);
        if (mu == 1)
            num = mul(num, x_pow_minus_one(n / d));
        else if (mu == -1)
            den = mul(den, x_pow_minus_one(n / d));
    }
    // den has leading coefficient 1 and constant term +-1; normalise sign
    if (den.back() < 0)
        for (auto& c : den)
            c = -c;
    Poly q = div_monic(num, den);
    if (q.back() < 0)
        for (auto& c : q)
            c = -c;
    return q;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        c += std::gcd(k, n) == 1;
    return c;
}

// (A + B sqrt d) / 2
struct Half {
    mpz_class A, B;
    long d;
};

inline Half from_basis(mpz_class const& x, mpz_class const& y, long d) {
    if (((d % 4) + 4) % 4 == 1)
        return {2 * x + y, y, d};
    return {2 * x, 2 * y, d};
}

inline Half hmul(Half const& a, Half const& b) {
    mpz_class A = a.A * b.A + a.d * a.B * b.B;
    mpz_class B = a.A * b.B + a.B * b.A;
    return {A / 2, B / 2, a.d};
}

inline Half hadd(Half const& a, Half const& b) { return {a.A + b.A, a.B + b.B, a.d}; }

inline Half hconst(mpz_class const& c, long d) { return {2 * c, 0, d}; }

inline mpz_class hnorm(Half const& a) { return (a.A * a.A - a.d * a.B * a.B) / 4; }

inline Half hpow(Half base, std::uint64_t e) {
    Half r = hconst(1, base.d);
    while (e) {
        if (e & 1)
            r = hmul(r, base);
        base = hmul(base, base);
        e >>= 1;
    }
    return r;
}

inline Half heval(Poly const& f, Half const& u) {
    Half acc = hconst(0, u.d);
    for (std::size_t i = f.size(); i-- > 0;)
        acc = hadd(hmul(acc, u), hconst(f[i], u.d));
    return acc;
}

// basis coordinates x + y*omega of (A + B sqrt d)/2
inline void to_basis(Half const& a, mpz_class& x, mpz_class& y) {
    if (((a.d % 4) + 4) % 4 == 1) {
        y = a.B;
        x = (a.A - a.B) / 2;
    } else {
        x = a.A / 2;
        y = a.B / 2;
    }
}

inline mpz_class mod(mpz_class a, mpz_class const& m) {
    a %= m;
    if (a < 0)
        a += m;
    return a;
}

// image of a under sqrt d -> s in Z/m (m odd, so 1/2 exists)
inline mpz_class image(Half const& a, mpz_class const& s, mpz_class const& m) {
    mpz_class inv2 = (m + 1) / 2;
    return mod((a.A + a.B * s) * inv2, m);
}

// a == 1 modulo m O_K
inline bool is_one_mod(Half const& a, mpz_class const& m) {
    mpz_class x, y;
    to_basis(a, x, y);
    return mod(x - 1, m) == 0 && mod(y, m) == 0;
}

inline bool is_zero_mod(Half const& a, mpz_class const& m) {
    mpz_class x, y;
    to_basis(a, x, y);
    return mod(x, m) == 0 && mod(y, m) == 0;
}

// square roots of d modulo m by exhaustion
inline std::vector<std::uint64_t> sqrt_mod(long d, std::uint64_t m) {
    std::vector<std::uint64_t> out;
    auto dd = static_cast<std::uint64_t>(((d % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m));
    for (std::uint64_t s = 0; s < m; ++s)
        if ((s * s) % m == dd)
            out.push_back(s);
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

inline int legendre(long a, std::uint64_t p) {
    auto r = static_cast<std::uint64_t>(((a % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p));
    if (r == 0)
        return 0;
    return sqrt_mod(static_cast<long>(r), p).empty() ? -1 : 1;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// a^e mod m by e - 1 multiplications
inline std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    for (std::uint64_t i = 0; i < e; ++i)
        r = mulmod(r, a, m);
    return r;
}

/// Fixed-seed generator used by all property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240607);
    return g;
}

} // namespace oracle
