#include "abcprat/error.hpp"
#include "abcprat/numerics.hpp"
#include "abcprat/quadfield.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace abcprat;

namespace {

ErrorKind kind_of(IntPoly const& f) {
    try {
        certify_roots(f);
    } catch (Error const& e) {
        return e.kind();
    }
    return ErrorKind::Io;
}

// Lehmer's polynomial: a Salem number, two conjugates off the circle and
// eight on it
IntPoly lehmer() { return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

std::vector<IntPoly> sample_units() {
    return {IntPoly{-1, -2, 1}, IntPoly{1, -3, 1},  IntPoly{-1, -1, 0, 1}, IntPoly{-1, -1, 1},
            cyclotomic(5),     cyclotomic(12),     IntPoly{1, 0, 1},      lehmer(),
            IntPoly{1, -4, 1}, IntPoly{-1, 0, 0, 1, 1}, IntPoly{1, -1, -1, -1, 1}, IntPoly{-1, 1, 0, 0, 0, 1}};
}

} // namespace

TEST_CASE("certify_roots of x^2 - 2x - 1") {
    auto u = certify_roots(IntPoly{-1, -2, 1}, 1e-12);
    REQUIRE(u.roots.size() == 2);
    long double r2 = std::sqrt(2.0L);
    std::vector<long double> want{1 + r2, 1 - r2};
    for (auto const& r : u.roots) {
        CHECK(r.real);
        CHECK(r.radius.to_double() < 1e-12);
        bool hit = false;
        for (auto w : want)
            hit = hit || std::fabs(static_cast<long double>(r.center.re.to_double()) - w) < 1e-12;
        CHECK(hit);
    }
}

TEST_CASE("certify_roots edge cases") {
    auto one = certify_roots(IntPoly{-1, 1});
    REQUIRE(one.roots.size() == 1);
    CHECK(one.roots[0].center.re.to_double() == 1.0);
    CHECK(kind_of(IntPoly{-3, 0, 1}) == ErrorKind::NotAUnit);
    CHECK(kind_of(IntPoly{1, 2, 1}) == ErrorKind::NotSquarefree);
    CHECK(kind_of(IntPoly{1, 0, 2}) == ErrorKind::NotAUnit);
}

TEST_CASE("root enclosures are disjoint, small and contain roots") {
    for (auto const& f : sample_units()) {
        auto u = certify_roots(f, 1e-25);
        REQUIRE(static_cast<int>(u.roots.size()) == f.degree());
        for (std::size_t i = 0; i < u.roots.size(); ++i) {
            REQUIRE(u.roots[i].radius.to_double() < 1e-25);
            for (std::size_t j = i + 1; j < u.roots.size(); ++j)
                REQUIRE(abs(u.roots[i].center - u.roots[j].center) > u.roots[i].radius + u.roots[j].radius);
        }
        // product of the roots is +-1
        Complex prod(Real(1.0, 256), Real(256));
        for (auto const& r : u.roots)
            prod = prod * r.center;
        REQUIRE(std::fabs(abs(prod).to_double() - 1.0) < 1e-20);
    }
}

TEST_CASE("is_in_S") {
    CHECK(is_in_S(certify_roots(IntPoly{-1, -2, 1})) == SMembership::Yes);
    CHECK(is_in_S(certify_roots(cyclotomic(5))) == SMembership::No);
    CHECK(is_in_S(certify_roots(IntPoly{-1, -1, 0, 1})) == SMembership::Yes);
    CHECK(is_in_S(certify_roots(lehmer())) == SMembership::No);
    CHECK(is_in_S(certify_roots(IntPoly{1, -4, 1})) == SMembership::Yes);
}

TEST_CASE("is_in_S is invariant under inversion and negation") {
    for (auto const& f : sample_units()) {
        auto s = is_in_S(certify_roots(f));
        REQUIRE(s != SMembership::Undecided);
        REQUIRE(is_in_S(certify_roots(inverse_minpoly(f))) == s);
        REQUIRE(is_in_S(certify_roots(negated_minpoly(f))) == s);
    }
}

TEST_CASE("is_pisot") {
    CHECK(is_pisot(certify_roots(IntPoly{-1, -2, 1})));
    CHECK(is_pisot(certify_roots(IntPoly{1, -3, 1})));
    CHECK_FALSE(is_pisot(certify_roots(IntPoly{1, 0, 1})));
    CHECK(is_pisot(certify_roots(IntPoly{-1, -1, 0, 1})));
    CHECK_FALSE(is_pisot(certify_roots(lehmer())));
    CHECK_FALSE(is_pisot(certify_roots(negated_minpoly(IntPoly{-1, -2, 1})))); // -(1+sqrt 2) < -1
    for (auto const& f : sample_units()) {
        auto u = certify_roots(f);
        if (is_pisot(u))
            REQUIRE(is_in_S(u) == SMembership::Yes);
    }
}

TEST_CASE("growth constants for 1 + sqrt 2") {
    auto c = growth_constants(certify_roots(IntPoly{-1, -2, 1}));
    CHECK(c.degree == 2);
    CHECK(c.k == 2);
    double a = 1 + std::sqrt(2.0);
    CHECK(c.a == doctest::Approx(a).epsilon(1e-12));
    CHECK(c.a <= a);
    CHECK(c.beta >= a);
    CHECK(c.c == doctest::Approx(0.5 * std::log((a * a - 1) / 2)).epsilon(1e-12));
    CHECK(c.c == doctest::Approx(0.4406867935).epsilon(1e-9));
    CHECK(c.epsilon_max == doctest::Approx(c.c / (2 * 2 * std::log(c.beta_k))));
    CHECK(c.gamma == doctest::Approx(std::pow(2.0, 2.0 / c.n0) * c.beta_k * c.beta_k).epsilon(1e-10));
    CHECK(c.gamma0 == doctest::Approx(2 * c.beta_k * c.beta_k));
}

TEST_CASE("growth constants rejects units off S") {
    CHECK_THROWS_AS(growth_constants(certify_roots(cyclotomic(5))), Error);
    CHECK_THROWS_AS(growth_constants(certify_roots(lehmer())), Error);
}

TEST_CASE("k is minimal and n0 is the first n from which the threshold holds") {
    for (auto const& f : sample_units()) {
        auto u = certify_roots(f);
        if (is_in_S(u) != SMembership::Yes)
            continue;
        auto c = growth_constants(u);
        int m = c.degree;
        auto admissible = [&](unsigned k) {
            if ((std::pow(c.a, k) - 1) * std::pow(2.0, 1 - m) <= 1)
                return false;
            for (auto const& r : u.roots) {
                double mod = abs(r.center).to_double();
                if (mod < 1 && std::pow(mod, k) > 0.5 + 1e-12)
                    return false;
                if (mod > 1 && std::pow(mod, k) < 2 - 1e-12)
                    return false;
            }
            return true;
        };
        REQUIRE(admissible(c.k));
        for (unsigned k = 1; k < c.k; ++k)
            REQUIRE_FALSE(admissible(k));
        double slope = c.c - 2 * m * c.epsilon * std::log(c.beta_k);
        auto holds = [&](double n) { return slope * n > m * std::log(n); };
        for (std::uint64_t n = c.n0; n < c.n0 + 5000; ++n)
            REQUIRE(holds(static_cast<double>(n)));
        if (c.n0 > 1)
            REQUIRE_FALSE(holds(static_cast<double>(c.n0 - 1)));
        // 2^m beta_k^(m n) <= gamma^n for n >= n0
        for (std::uint64_t n = c.n0; n < c.n0 + 200; ++n)
            REQUIRE(m * std::log(2.0) + m * n * std::log(c.beta_k) <= n * std::log(c.gamma) + 1e-9);
    }
}

TEST_CASE("|N(Phi_n(u^k))| >= exp(c n) for n <= 60") {
    for (auto const& f : {IntPoly{-1, -2, 1}, IntPoly{1, -3, 1}, IntPoly{-1, -1, 0, 1}, IntPoly{-1, -1, 1}}) {
        auto u = certify_roots(f);
        auto c = growth_constants(u);
        IntPoly g = power_charpoly(f, c.k);
        for (std::uint64_t n = 1; n <= 60; ++n) {
            if (2 * euler_phi(n) < n)
                continue;
            mpz_class N = abs(resultant(cyclotomic(n), g));
            Real bound = exp(Real(c.c * static_cast<double>(n), 256));
            REQUIRE(mpfr_cmp_z(bound.get(), N.get_mpz_t()) <= 0);
        }
    }
}

TEST_CASE("resultant of Phi_n against a quadratic minpoly is the field norm") {
    struct Case {
        long d;
        long x, y;
    };
    for (Case cs : {Case{2, 1, 1}, Case{2, 3, 2}, Case{5, 0, 1}, Case{13, 1, 1}}) {
        QuadField F = make_field(cs.d);
        QuadInt u = F.element(cs.x, cs.y);
        auto U = oracle::from_basis(u.x, u.y, cs.d);
        for (std::uint64_t n = 1; n <= 60; ++n) {
            auto phi = oracle::cyclotomic(n);
            mpz_class direct = abs(oracle::hnorm(oracle::heval(phi, U)));
            REQUIRE(abs(resultant(cyclotomic(n), quad_minpoly(u))) == direct);
        }
    }
}
