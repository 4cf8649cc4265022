#include "abcprat/error.hpp"
#include "abcprat/scans.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace abcprat;

namespace {

struct Fixture {
    QuadField F;
    AlgebraicUnit u;
    GrowthConstants c;
    explicit Fixture(long d)
        : F(make_field(d)), u(certify_roots(quad_minpoly(F.fundamental_unit))), c(growth_constants(u)) {}
};

// v^e modulo P^j by repeated multiplication with the half-integer oracle
oracle::Half slow_pow_mod(oracle::Half const& v, std::uint64_t e, mpz_class const& m) {
    oracle::Half acc = oracle::hconst(1, v.d);
    for (std::uint64_t i = 0; i < e; ++i) {
        acc = oracle::hmul(acc, v);
        mpz_class x, y;
        oracle::to_basis(acc, x, y);
        acc = oracle::from_basis(oracle::mod(x, m), oracle::mod(y, m), v.d);
    }
    return acc;
}

bool in_P(QuadField const& F, oracle::Half const& a, PrimeIdealAboveP const& P, unsigned j) {
    mpz_class m = P.p;
    for (unsigned i = 1; i < j; ++i)
        m *= P.p;
    if (P.splitting == Splitting::Inert)
        return oracle::is_zero_mod(a, m);
    mpz_class s = omega_is_half(F.d) ? oracle::mod(2 * P.hensel_root - 1, m) : oracle::mod(P.hensel_root, m);
    return oracle::image(a, s, m) == 0;
}

bool one_mod_P(QuadField const& F, oracle::Half const& a, PrimeIdealAboveP const& P, unsigned j) {
    oracle::Half b = a;
    b.A -= 2;
    return in_P(F, b, P, j);
}

void reverify(Fixture const& fx, std::vector<ScanRecord> const& recs) {
    QuadInt v = quad_pow(fx.F.fundamental_unit, fx.c.k);
    auto V = oracle::from_basis(v.x, v.y, fx.F.d);
    std::set<std::pair<mpz_class, mpz_class>> seen;
    for (auto const& r : recs) {
        if (r.status != ScanStatus::Success)
            continue;
        REQUIRE(r.chosen.has_value());
        auto const& P = *r.chosen;
        REQUIRE(r.phi_ok);
        REQUIRE(r.n % P.p.get_ui() != 0);
        // (i)
        auto phi = oracle::heval(oracle::cyclotomic(r.n), V);
        REQUIRE(in_P(fx.F, phi, P, 1));
        mpz_class p2 = P.p * P.p;
        REQUIRE_FALSE(one_mod_P(fx.F, slow_pow_mod(V, r.n, p2), P, 2));
        // (ii)
        for (std::uint64_t j = 1; j < r.n; ++j)
            REQUIRE_FALSE(one_mod_P(fx.F, slow_pow_mod(V, j, P.p), P, 1));
        REQUIRE(one_mod_P(fx.F, slow_pow_mod(V, r.n, P.p), P, 1));
        // (iii)
        REQUIRE(log_abs(P.norm) <= static_cast<double>(r.n) * std::log(fx.c.gamma) + 1e-9);
        REQUIRE(seen.insert({P.p, P.hensel_root}).second);
    }
}

} // namespace

TEST_CASE("wieferich scan for 1 + sqrt 2") {
    Fixture fx(2);
    auto recs = wieferich_scan(fx.F, fx.F.fundamental_unit, fx.c, 40);
    REQUIRE(recs.size() == 40);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        REQUIRE(recs[i].n == i + 1);
        REQUIRE(recs[i].k == 2);
        REQUIRE(recs[i].phi_ok == (2 * euler_phi(i + 1) >= i + 1));
        if (recs[i].status == ScanStatus::Success)
            REQUIRE((recs[i].order_is_n && recs[i].wieferich_ok && recs[i].not_dividing_n && recs[i].norm_bound_ok));
    }
    // n = 3: Phi_3(3 + 2 sqrt 2) = 21 + 14 sqrt 2 has norm 49
    CHECK(recs[2].norm_phi == 49);
    CHECK(recs[2].status == ScanStatus::Success);
    CHECK(recs[2].chosen->p == 7);
    // n = 1: v - 1 = 2 + 2 sqrt 2 only involves the ramified prime
    CHECK(recs[0].status == ScanStatus::NoQualifyingPrime);
    reverify(fx, recs);
}

TEST_CASE("wieferich scan re-verification across fields") {
    for (long d : {3, 5, 6, 13}) {
        Fixture fx(d);
        auto recs = wieferich_scan(fx.F, fx.F.fundamental_unit, fx.c, 30);
        reverify(fx, recs);
    }
}

TEST_CASE("scan output does not depend on the thread count") {
    Fixture fx(2);
    ScanOptions one, four;
    four.threads = 4;
    auto a = wieferich_scan(fx.F, fx.F.fundamental_unit, fx.c, 30, one);
    auto b = wieferich_scan(fx.F, fx.F.fundamental_unit, fx.c, 30, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].status == b[i].status);
        REQUIRE(a[i].norm_phi == b[i].norm_phi);
        REQUIRE(a[i].chosen.has_value() == b[i].chosen.has_value());
        if (a[i].chosen)
            REQUIRE(*a[i].chosen == *b[i].chosen);
    }
    auto pa = prationality_scan(fx.F, 2000, one);
    auto pb = prationality_scan(fx.F, 2000, four);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i)
        REQUIRE(pa[i].verdict == pb[i].verdict);
}

TEST_CASE("partial factorizations are skipped") {
    Fixture fx(2);
    ScanOptions o;
    o.factor.rho_budget = 1;
    o.factor.trial_bound = 100;
    auto recs = wieferich_scan(fx.F, fx.F.fundamental_unit, fx.c, 40, o);
    int partial = 0;
    for (auto const& r : recs)
        if (r.reason == SkipReason::PartialFactorization) {
            ++partial;
            REQUIRE(r.status == ScanStatus::Skipped);
            REQUIRE(r.factor_status == FactorStatus::Partial);
        }
    CHECK(partial > 0);
}

TEST_CASE("count_report") {
    Fixture fx(2);
    auto recs = wieferich_scan(fx.F, fx.F.fundamental_unit, fx.c, 40);
    mpz_class X = ceil_gamma_power(fx.c.gamma, 40);
    auto rep = count_report(recs, fx.c, X);
    CHECK(rep.n1 == 40);
    CHECK(rep.n0 == fx.c.n0);
    CHECK(rep.successes > 0);
    CHECK(rep.c_hat > 0);
    CHECK(rep.distinct_rational_primes >= (rep.successes + 1) / 2);
    CHECK(rep.lower_bound == (rep.successes + 1) / 2);

    auto small = count_report(recs, fx.c, 1000);
    CHECK(small.n1 < small.n0);
    CHECK(small.successes == 0);
    CHECK(small.eligible_n == 0);

    std::vector<ScanRecord> few(recs.begin(), recs.begin() + 10);
    CHECK_THROWS_AS(count_report(few, fx.c, X), Error);
}

TEST_CASE("gamma power comparisons are exact") {
    CHECK(within_gamma_power(2.0, 10, 1024));
    CHECK_FALSE(within_gamma_power(2.0, 10, 1025));
    CHECK(ceil_gamma_power(2.0, 10) == 1024);
    CHECK(ceil_gamma_power(1.5, 3) == 4);
}

TEST_CASE("p-rationality examples") {
    auto F = make_field(2);
    auto v5 = prationality_verdict(F, F.fundamental_unit, 5);
    CHECK(v5.verdict == Verdict::PRational);
    REQUIRE(v5.witnesses.size() == 1);
    CHECK(v5.witnesses[0].power.a == 1);
    CHECK(v5.witnesses[0].power.b == 20);
    auto v2 = prationality_verdict(F, F.fundamental_unit, 2);
    CHECK(v2.verdict == Verdict::Excluded);
    CHECK(v2.reason == ExclusionReason::DividesGroupOrder);
    CHECK(prationality_verdict(F, F.fundamental_unit, 13).verdict == Verdict::NonPRational);
    CHECK(prationality_verdict(F, F.fundamental_unit, 31).verdict == Verdict::NonPRational);

    auto G = make_field(10); // h = 2, disc = 40, p0 = 5
    CHECK(prationality_verdict(G, G.fundamental_unit, 5).reason == ExclusionReason::Ramified);
    CHECK(prationality_verdict(G, G.fundamental_unit, 3).reason == ExclusionReason::BelowP0);
    auto H = make_field(79); // h = 3
    CHECK(prationality_verdict(H, H.fundamental_unit, 3).reason == ExclusionReason::DividesClassNumber);
    CHECK(prationality_scan(F, 1).empty());
}

TEST_CASE("p-rationality verdicts are invariant under -eps, 1/eps and conj(eps)") {
    for (long d : {2, 3, 5, 7, 10}) {
        QuadField F = make_field(d);
        QuadInt e = F.fundamental_unit;
        auto base = prationality_scan(F, 1000);
        for (QuadInt alt : {-e, quad_unit_inverse(e), quad_conj(e), quad_pow(e, 2)}) {
            auto other = prationality_scan(F, 1000, {}, alt);
            REQUIRE(other.size() == base.size());
            for (std::size_t i = 0; i < base.size(); ++i)
                REQUIRE(other[i].verdict == base[i].verdict);
        }
    }
}

TEST_CASE("rational wieferich primes") {
    CHECK(rational_wieferich_scan(2, 10000) == std::vector<std::uint64_t>{1093, 3511});
    CHECK(rational_wieferich_scan(2, 1000).empty());
    // base 3: 11 and 1006003
    CHECK(rational_wieferich_scan(3, 2000) == std::vector<std::uint64_t>{11});
    // p | alpha is skipped although 10^(p-1) is 0 mod p
    for (auto p : rational_wieferich_scan(10, 5000))
        CHECK(p != 2);
    CHECK_THROWS_AS(rational_wieferich_scan(1, 100), Error);
    auto got = rational_wieferich_scan(5, 5000);
    std::vector<std::uint64_t> want;
    for (std::uint64_t p = 2; p <= 5000; ++p)
        if (p != 5 && oracle::is_prime(p) && oracle::slow_pow(5, p - 1, p * p) == 1)
            want.push_back(p);
    CHECK(got == want);
}

TEST_CASE("generic scan on the smallest Pisot unit") {
    auto u = certify_roots(IntPoly{-1, -1, 0, 1});
    auto c = growth_constants(u);
    auto recs = generic_unit_scan(u, c, 20);
    REQUIRE(recs.size() == 20);
    IntPoly g = power_charpoly(u.minpoly, c.k);
    int successes = 0;
    for (auto const& r : recs) {
        if (r.status != ScanStatus::Success)
            continue;
        ++successes;
        auto const& P = *r.chosen;
        std::uint64_t p = P.p.get_ui();
        std::uint64_t root = P.hensel_root.get_ui();
        REQUIRE(r.n % p != 0);
        REQUIRE(g.eval(mpz_class(std::to_string(root))) % (P.p * P.p) == 0);
        // exact order n of the root mod p, and root^n != 1 mod p^2
        for (std::uint64_t j = 1; j < r.n; ++j)
            REQUIRE(oracle::slow_pow(root % p, j, p) != 1);
        REQUIRE(oracle::slow_pow(root % p, r.n, p) == 1);
        REQUIRE(oracle::slow_pow(root, r.n, p * p) != 1);
        REQUIRE(resultant(cyclotomic(r.n), g) % P.p == 0);
    }
    CHECK(successes > 0);
}

TEST_CASE("generic successes are contained in the prime-ideal scan") {
    for (long d : {5, 13, 29, 2}) {
        Fixture fx(d);
        auto w = wieferich_scan(fx.F, fx.F.fundamental_unit, fx.c, 40);
        auto g = generic_unit_scan(fx.u, fx.c, 40);
        REQUIRE(w.size() == g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i].status == ScanStatus::Success)
                REQUIRE(w[i].status == ScanStatus::Success);
    }
    // for d = 5 the rational-prime route does find records
    Fixture fx(5);
    int found = 0;
    for (auto const& r : generic_unit_scan(fx.u, fx.c, 40))
        found += r.status == ScanStatus::Success;
    CHECK(found > 0);
}

TEST_CASE("only inert primes in Phi_8 of the cubed golden ratio") {
    auto u = certify_roots(IntPoly{-1, -1, 1});
    auto c = growth_constants(u);
    REQUIRE(c.k == 3);
    auto recs = generic_unit_scan(u, c, 8);
    auto const& r = recs.at(7);
    // v = 2 + sqrt 5, N(v^4 + 1) = 2^2 3^4; 2 divides the discriminant, 3 is inert
    auto V = oracle::hpow(oracle::from_basis(0, 1, 5), 3);
    CHECK(oracle::hnorm(oracle::heval(oracle::cyclotomic(8), V)) == 324);
    CHECK(oracle::legendre(5, 3) == -1);
    CHECK(r.status == ScanStatus::Skipped);
    CHECK(r.reason == SkipReason::HigherDegreePrime);
    CHECK_FALSE(r.chosen.has_value());
}
