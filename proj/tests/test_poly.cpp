#include "abcprat/error.hpp"
#include "abcprat/poly.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace abcprat;

namespace {

IntPoly from_oracle(oracle::Poly const& p) { return IntPoly(std::vector<mpz_class>(p.begin(), p.end())); }

IntPoly random_poly(int max_degree, long bound) {
    auto& g = oracle::rng();
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<mpz_class> c;
    int d = deg(g);
    for (int i = 0; i <= d; ++i)
        c.emplace_back(coef(g));
    if (c.back() == 0)
        c.back() = 1;
    return IntPoly(c);
}

} // namespace

TEST_CASE("cyclotomic small values") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic(0), Error);
}

TEST_CASE("cyclotomic agrees with the Mobius product") {
    for (std::uint64_t n = 1; n <= 120; ++n)
        CHECK(cyclotomic(n) == from_oracle(oracle::cyclotomic(n)));
}

TEST_CASE("cyclotomic is monic of degree phi(n)") {
    for (std::uint64_t n = 1; n <= 500; ++n) {
        IntPoly f = cyclotomic(n);
        REQUIRE(f.is_monic());
        REQUIRE(f.degree() == static_cast<int>(euler_phi(n)));
    }
}

TEST_CASE("product of Phi_d over d | n is x^n - 1") {
    for (unsigned n = 1; n <= 200; ++n) {
        IntPoly prod{1};
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = prod * cyclotomic(d);
        REQUIRE(prod == IntPoly::x_pow_minus_one(n));
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (std::uint64_t n = 1; n <= 300; ++n)
        REQUIRE(euler_phi(n) == oracle::euler_phi(n));
    CHECK_THROWS_AS(euler_phi(0), Error);
}

TEST_CASE("phi_half_sieve") {
    CHECK(phi_half_sieve(6) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK(phi_half_sieve(1) == std::vector<std::uint64_t>{1});
    auto s = phi_half_sieve(2000);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t n = 1; n <= 2000; ++n)
        if (2 * oracle::euler_phi(n) >= n)
            brute.push_back(n);
    CHECK(s == brute);
    CHECK(phi_half_sieve(100000).size() == 48864);
}

TEST_CASE("resultant values and sign convention") {
    CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 1}) == 7);
    CHECK(resultant(IntPoly{-1, -2, 1}, cyclotomic(3)) == 7);
    CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), Error);
    for (int i = 0; i < 200; ++i) {
        IntPoly f = random_poly(5, 9), g = random_poly(5, 9);
        if (f.degree() < 0 || g.degree() < 0)
            continue;
        int s = (f.degree() * g.degree()) % 2 ? -1 : 1;
        REQUIRE(resultant(f, g) == s * resultant(g, f));
        REQUIRE(resultant(f, g) == sylvester_resultant(g, f));
    }
}

TEST_CASE("resultant is multiplicative") {
    for (int i = 0; i < 200; ++i) {
        IntPoly f = random_poly(4, 7), g = random_poly(4, 7), h = random_poly(4, 7);
        REQUIRE(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("resultant against a linear factor is an evaluation") {
    for (int i = 0; i < 100; ++i) {
        IntPoly f = random_poly(6, 20);
        long c = static_cast<long>(oracle::rng()() % 41) - 20;
        REQUIRE(resultant(f, IntPoly{-c, 1}) == f.eval(c));
    }
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == IntPoly{-1, 1});
    CHECK(poly_gcd(cyclotomic(6), cyclotomic(3)) == IntPoly{1});
    for (unsigned n = 1; n <= 50; ++n)
        REQUIRE(poly_gcd(IntPoly::x_pow_minus_one(n), cyclotomic(n)) == cyclotomic(n));
    CHECK(poly_gcd(IntPoly{2, 4}, IntPoly{0, 3, 6}) == IntPoly{1, 2});
}

TEST_CASE("squarefree and Sturm counts") {
    CHECK(is_squarefree(IntPoly{-1, -2, 1}));
    CHECK_FALSE(is_squarefree(IntPoly{1, 2, 1}));
    CHECK(count_real_roots(IntPoly{-2, 0, 1}, -2, 2) == 2);
    CHECK(count_real_roots(IntPoly{1, 0, 1}, -10, 10) == 0);
    CHECK(count_real_roots(IntPoly{-1, 1}, -1, 1) == 1); // root at the closed end
    CHECK(count_real_roots(IntPoly{1, 1}, -1, 1) == 0);  // open end
}

TEST_CASE("power_charpoly") {
    CHECK(power_charpoly(IntPoly{-1, -2, 1}, 2) == IntPoly{1, -6, 1});
    CHECK(power_charpoly(IntPoly{-1, -2, 1}, 1) == IntPoly{-1, -2, 1});
    // (x^3 - x - 1): trace of u^2 = (sum u)^2 - 2 e2 = 0 + 2
    IntPoly g = power_charpoly(IntPoly{-1, -1, 0, 1}, 2);
    CHECK(g.degree() == 3);
    CHECK(g.coeff(2) == -2);
}

TEST_CASE("roots_mod_p") {
    auto r = roots_mod_p(IntPoly{-2, 0, 1}, 7);
    CHECK(r == std::vector<mpz_class>{3, 4});
    CHECK(roots_mod_p(IntPoly{-2, 0, 1}, 5).empty());
    mpz_class p("1000000007");
    IntPoly f = IntPoly{-5, 1} * IntPoly{-11, 1} * IntPoly{1, 0, 1};
    auto big = roots_mod_p(f, p);
    std::vector<mpz_class> want{5, 11};
    // x^2 + 1 splits mod p iff p = 1 mod 4; 1000000007 = 3 mod 4
    CHECK(big == want);
}
