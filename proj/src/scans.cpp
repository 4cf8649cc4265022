#include "abcprat/scans.hpp"

#include "abcprat/error.hpp"
#include "abcprat/parallel.hpp"
#include "abcprat/real.hpp"

#include <cmath>
#include <set>

namespace abcprat {

std::string_view to_string(ScanStatus s) {
    switch (s) {
    case ScanStatus::Success:
        return "Success";
    case ScanStatus::NoQualifyingPrime:
        return "NoQualifyingPrime";
    case ScanStatus::Skipped:
        return "Skipped";
    }
    return "?";
}

std::string_view to_string(SkipReason r) {
    switch (r) {
    case SkipReason::None:
        return "";
    case SkipReason::PhiCondition:
        return "PhiCondition";
    case SkipReason::PartialFactorization:
        return "PartialFactorization";
    case SkipReason::HigherDegreePrime:
        return "HigherDegreePrime";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Excluded:
        return "Excluded";
    case Verdict::PRational:
        return "PRational";
    case Verdict::NonPRational:
        return "NonPRational";
    }
    return "?";
}

std::string_view to_string(ExclusionReason r) {
    switch (r) {
    case ExclusionReason::None:
        return "";
    case ExclusionReason::DividesGroupOrder:
        return "DividesGroupOrder";
    case ExclusionReason::Ramified:
        return "Ramified";
    case ExclusionReason::DividesClassNumber:
        return "DividesClassNumber";
    case ExclusionReason::BelowP0:
        return "BelowP0";
    }
    return "?";
}

namespace {

Real exact_gamma_power(double gamma, std::uint64_t n) {
    auto prec = static_cast<mpfr_prec_t>(53 * n + 64);
    Real g(prec);
    mpfr_set_d(g.get(), gamma, MPFR_RNDN);
    Real r(prec);
    mpfr_pow_ui(r.get(), g.get(), n, MPFR_RNDN);
    return r;
}

// gamma^n <= X
bool gamma_power_at_most(double gamma, std::uint64_t n, mpz_class const& X) {
    Real g = exact_gamma_power(gamma, n);
    return mpfr_cmp_z(g.get(), X.get_mpz_t()) <= 0;
}

bool phi_ok(std::uint64_t n) { return 2 * euler_phi(n) >= n; }

bool divides_u64(mpz_class const& p, std::uint64_t n) {
    mpz_class N(std::to_string(n));
    return mpz_divisible_p(N.get_mpz_t(), p.get_mpz_t()) != 0;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0)
            out.push_back(q);
        while (n % q == 0)
            n /= q;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

ScanRecord quadratic_record(QuadField const& F, QuadInt const& v, unsigned k, double gamma, std::uint64_t n,
                            ScanOptions const& opts) {
    ScanRecord rec;
    rec.n = n;
    rec.k = k;
    rec.phi_ok = phi_ok(n);
    QuadInt alpha = quad_eval(cyclotomic(n), v);
    rec.norm_phi = abs(quad_norm(alpha));
    if (!rec.phi_ok) {
        rec.reason = SkipReason::PhiCondition;
        return rec;
    }
    IdealSplit split = ideal_valuations(F, alpha, opts.factor, opts.cache);
    rec.factor_status = split.status;
    if (!split.complete()) {
        rec.reason = SkipReason::PartialFactorization;
        return rec;
    }
    rec.status = ScanStatus::NoQualifyingPrime;
    for (auto const& [P, val] : split.prime_ideals) {
        if (val != 1 || P.splitting == Splitting::Ramified || divides_u64(P.p, n))
            continue;
        bool order = has_order(F, v, P, n);
        bool wieferich = !unit_pow_mod_p2(F, v, mpz_class(std::to_string(n)), P).is_one();
        bool bound = within_gamma_power(gamma, n, P.norm);
        if (order && wieferich && bound) {
            rec.chosen = P;
            rec.order_is_n = rec.wieferich_ok = rec.not_dividing_n = rec.norm_bound_ok = true;
            rec.status = ScanStatus::Success;
            return rec;
        }
    }
    return rec;
}

struct GenericContext {
    IntPoly g;      // minimal polynomial of u^k
    IntPoly dg;
    mpz_class disc; // |disc(g)|
};

mpz_class eval_mod(IntPoly const& f, mpz_class const& x, mpz_class const& m) {
    mpz_class acc = 0;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * x + f.coeff(i);
        acc %= m;
    }
    if (acc < 0)
        acc += m;
    return acc;
}

bool root_has_order(mpz_class const& r, mpz_class const& p, std::uint64_t n) {
    mpz_class N(std::to_string(n));
    if (powmod(r, N, p) != 1)
        return false;
    for (auto q : prime_divisors(n))
        if (powmod(r, mpz_class(std::to_string(n / q)), p) == 1)
            return false;
    return true;
}

ScanRecord generic_record(GenericContext const& ctx, unsigned k, double gamma, std::uint64_t n,
                          ScanOptions const& opts) {
    ScanRecord rec;
    rec.n = n;
    rec.k = k;
    rec.phi_ok = phi_ok(n);
    IntPoly phi = cyclotomic(n);
    rec.norm_phi = abs(resultant(phi, ctx.g));
    if (!rec.phi_ok) {
        rec.reason = SkipReason::PhiCondition;
        return rec;
    }
    Factorization fz = factor(rec.norm_phi, opts.factor, opts.cache);
    rec.factor_status = fz.status;
    if (!fz.complete()) {
        rec.reason = SkipReason::PartialFactorization;
        return rec;
    }
    mpz_class T = abs(resultant(IntPoly::x_pow_minus_one(static_cast<unsigned>(n)), ctx.g));
    bool higher = false, degree_one = false;
    for (auto const& [p, e] : fz.factors) {
        if (divides_u64(p, n) || mpz_divisible_p(ctx.disc.get_mpz_t(), p.get_mpz_t()))
            continue;
        std::vector<mpz_class> roots;
        for (auto const& r : roots_mod_p(ctx.g, p, opts.factor.seed))
            if (root_has_order(r, p, n))
                roots.push_back(r);
        if (roots.empty()) {
            higher = true;
            continue;
        }
        degree_one = true;
        mpz_class rest = T / p;
        if (!mpz_divisible_p(T.get_mpz_t(), p.get_mpz_t()) || mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()))
            continue;
        mpz_class p2 = p * p;
        mpz_class r = roots.front();
        mpz_class inv;
        mpz_class slope = eval_mod(ctx.dg, r, p2);
        mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), p2.get_mpz_t());
        mpz_class lifted = (r - eval_mod(ctx.g, r, p2) * inv) % p2;
        if (lifted < 0)
            lifted += p2;
        bool wieferich = powmod(lifted, mpz_class(std::to_string(n)), p2) != 1;
        bool bound = within_gamma_power(gamma, n, p);
        if (wieferich && bound) {
            PrimeIdealAboveP P;
            P.p = p;
            P.splitting = Splitting::Split;
            P.residue_degree = 1;
            P.norm = p;
            P.hensel_root = lifted;
            rec.chosen = P;
            rec.order_is_n = rec.wieferich_ok = rec.not_dividing_n = rec.norm_bound_ok = true;
            rec.status = ScanStatus::Success;
            return rec;
        }
    }
    if (higher && !degree_one) {
        rec.reason = SkipReason::HigherDegreePrime;
        return rec;
    }
    rec.status = ScanStatus::NoQualifyingPrime;
    return rec;
}

} // namespace

bool within_gamma_power(double gamma, std::uint64_t n, mpz_class const& value) {
    Real g = exact_gamma_power(gamma, n);
    return mpfr_cmp_z(g.get(), value.get_mpz_t()) >= 0;
}

mpz_class ceil_gamma_power(double gamma, std::uint64_t n) {
    Real g = exact_gamma_power(gamma, n);
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), g.get(), MPFR_RNDU);
    return out;
}

std::vector<ScanRecord> wieferich_scan(QuadField const& F, QuadInt const& u, GrowthConstants const& constants,
                                       std::uint64_t n_max, ScanOptions const& opts) {
    if (n_max == 0)
        throw Error(ErrorKind::InvalidArgument, "n_max must be positive");
    if (u.d != F.d)
        throw Error(ErrorKind::MixedField, "unit does not belong to Q(sqrt " + std::to_string(F.d) + ")");
    if (abs(quad_norm(u)) != 1)
        throw Error(ErrorKind::NotAUnit, u.to_string() + " is not a unit");
    QuadInt v = quad_pow(u, constants.k);
    std::vector<ScanRecord> out(n_max);
    parallel_for(n_max, opts.threads,
                 [&](std::size_t i) { out[i] = quadratic_record(F, v, constants.k, constants.gamma, i + 1, opts); });
    return out;
}

std::vector<ScanRecord> generic_unit_scan(AlgebraicUnit const& u, GrowthConstants const& constants,
                                          std::uint64_t n_max, ScanOptions const& opts) {
    if (n_max == 0)
        throw Error(ErrorKind::InvalidArgument, "n_max must be positive");
    if (is_in_S(u) != SMembership::Yes)
        throw Error(ErrorKind::NotInS, u.label + " is not certified to lie in S");
    GenericContext ctx;
    ctx.g = power_charpoly(u.minpoly, constants.k);
    ctx.dg = ctx.g.derivative();
    ctx.disc = abs(sylvester_resultant(ctx.g, ctx.dg));
    if (ctx.disc == 0)
        throw Error(ErrorKind::NotSquarefree, "minimal polynomial of u^k has a repeated root");
    std::vector<ScanRecord> out(n_max);
    parallel_for(n_max, opts.threads,
                 [&](std::size_t i) { out[i] = generic_record(ctx, constants.k, constants.gamma, i + 1, opts); });
    return out;
}

CountReport count_report(std::vector<ScanRecord> const& records, GrowthConstants const& constants,
                         mpz_class const& X) {
    if (X < 2)
        throw Error(ErrorKind::InvalidArgument, "X must be at least 2");
    CountReport rep;
    rep.X = X;
    rep.n0 = constants.n0;
    double estimate = log_abs(X) / std::log(constants.gamma);
    auto n1 = static_cast<std::uint64_t>(std::max(0.0, std::floor(estimate)));
    while (gamma_power_at_most(constants.gamma, n1 + 1, X))
        ++n1;
    while (n1 > 0 && !gamma_power_at_most(constants.gamma, n1, X))
        --n1;
    rep.n1 = n1;

    std::uint64_t covered = 0;
    for (auto const& r : records)
        if (r.n == covered + 1)
            covered = r.n;
    if (covered < n1)
        throw Error(ErrorKind::InsufficientRecords, "records stop at n = " + std::to_string(covered) +
                                                        " but n1 = " + std::to_string(n1));

    std::set<mpz_class> primes;
    for (auto const& r : records) {
        if (r.n < rep.n0 || r.n > rep.n1 || !r.phi_ok)
            continue;
        ++rep.eligible_n;
        if (r.status == ScanStatus::Success) {
            ++rep.successes;
            primes.insert(r.chosen->p);
        }
    }
    auto m = static_cast<std::uint64_t>(constants.degree);
    rep.distinct_rational_primes = primes.size();
    rep.lower_bound = (rep.successes + m - 1) / m;
    rep.c_hat = static_cast<double>(rep.successes) / (static_cast<double>(m) * log_abs(X));
    return rep;
}

PRationalityVerdict prationality_verdict(QuadField const& F, QuadInt const& u, std::uint64_t p) {
    PRationalityVerdict out;
    out.p = p;
    auto divides = [p](std::uint64_t n) { return n % p == 0; };
    if (p == 2)
        out.reason = ExclusionReason::DividesGroupOrder;
    else if (divides(static_cast<std::uint64_t>(F.disc)))
        out.reason = ExclusionReason::Ramified;
    else if (divides(F.class_number))
        out.reason = ExclusionReason::DividesClassNumber;
    else if (p < F.p0())
        out.reason = ExclusionReason::BelowP0;
    if (out.reason != ExclusionReason::None)
        return out;

    out.verdict = Verdict::NonPRational;
    for (auto const& P : split_prime(F, mpz_class(std::to_string(p)))) {
        FermatWitness w;
        w.prime = P;
        w.power = unit_pow_mod_p2(F, u, P.norm - 1, P);
        w.fermat_quotient_nonzero = !w.power.is_one();
        if (w.fermat_quotient_nonzero)
            out.verdict = Verdict::PRational;
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

std::vector<PRationalityVerdict> prationality_scan(QuadField const& F, std::uint64_t X, ScanOptions const& opts,
                                                   std::optional<QuadInt> unit) {
    QuadInt u = unit.value_or(F.fundamental_unit);
    if (abs(quad_norm(u)) != 1)
        throw Error(ErrorKind::NotAUnit, u.to_string() + " is not a unit");
    std::vector<std::uint64_t> primes = X >= 2 ? primes_up_to(X) : std::vector<std::uint64_t>{};
    std::vector<PRationalityVerdict> out(primes.size());
    parallel_for(primes.size(), opts.threads, [&](std::size_t i) { out[i] = prationality_verdict(F, u, primes[i]); });
    return out;
}

std::vector<std::uint64_t> rational_wieferich_scan(std::uint64_t alpha, std::uint64_t X) {
    if (alpha < 2)
        throw Error(ErrorKind::InvalidArgument, "alpha must be at least 2");
    if (X < 3)
        throw Error(ErrorKind::InvalidArgument, "X must be at least 3");
    std::vector<std::uint64_t> out;
    mpz_class a(std::to_string(alpha));
    for (auto p : primes_up_to(X)) {
        if (alpha % p == 0)
            continue;
        mpz_class P(std::to_string(p));
        if (powmod(a, P - 1, P * P) == 1)
            out.push_back(p);
    }
    return out;
}

} // namespace abcprat
