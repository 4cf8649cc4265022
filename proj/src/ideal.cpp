#include "abcprat/ideal.hpp"

#include "abcprat/error.hpp"

namespace abcprat {

unsigned IdealSplit::valuation_at(PrimeIdealAboveP const& P) const {
    for (auto const& f : prime_ideals)
        if (f.prime == P)
            return f.valuation;
    return 0;
}

namespace {

unsigned split_valuation(QuadField const& F, QuadInt const& alpha, PrimeIdealAboveP const& P, unsigned cap) {
    unsigned v = 0;
    while (v < cap && in_prime_power(F, alpha, P, v + 1))
        ++v;
    return v;
}

} // namespace

IdealSplit ideal_valuations(QuadField const& F, QuadInt const& alpha, FactorOptions const& opts, FactorCache* cache) {
    if (alpha.is_zero())
        throw Error(ErrorKind::InvalidArgument, "the zero ideal has no factorization");
    if (alpha.d != F.d)
        throw Error(ErrorKind::MixedField, "element does not belong to Q(sqrt " + std::to_string(F.d) + ")");
    IdealSplit out;
    out.element = alpha;
    out.norm = abs(quad_norm(alpha));
    if (out.norm == 1)
        return out;

    Factorization fz = factor(out.norm, opts, cache);
    out.status = fz.status;
    out.unfactored = fz.cofactor;

    for (auto const& [p, e] : fz.factors) {
        auto primes = split_prime(F, p);
        switch (primes.front().splitting) {
        case Splitting::Ramified:
            out.prime_ideals.push_back({primes.front(), e});
            break;
        case Splitting::Inert:
            if (e % 2 != 0)
                throw Error(ErrorKind::InvalidArgument, "odd exponent of inert prime " + p.get_str() + " in a norm");
            out.prime_ideals.push_back({primes.front(), e / 2});
            break;
        case Splitting::Split: {
            unsigned v0 = split_valuation(F, alpha, primes[0], e);
            unsigned v1 = split_valuation(F, alpha, primes[1], e);
            if (v0 + v1 != e)
                throw Error(ErrorKind::InvalidArgument,
                            "valuations above " + p.get_str() + " do not add up to the norm exponent");
            if (v0 > 0)
                out.prime_ideals.push_back({primes[0], v0});
            if (v1 > 0)
                out.prime_ideals.push_back({primes[1], v1});
            break;
        }
        }
    }
    for (auto const& [P, v] : out.prime_ideals) {
        mpz_class part;
        mpz_pow_ui(part.get_mpz_t(), P.norm.get_mpz_t(), v);
        if (v == 1)
            out.squarefree_norm *= part;
        else
            out.squarefull_norm *= part;
    }
    return out;
}

mpz_class radical_of_ideal(IdealSplit const& split) {
    if (!split.complete())
        throw Error(ErrorKind::PartialFactorization, "norm " + split.norm.get_str() + " is not fully factored");
    mpz_class rad = 1;
    for (auto const& f : split.prime_ideals)
        rad *= f.prime.norm;
    return rad;
}

IdealSplit split_In_Jn(QuadField const& F, QuadInt const& u, std::uint64_t n, FactorOptions const& opts,
                       FactorCache* cache) {
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "n must be positive");
    QuadInt a = quad_pow(u, n) - F.one();
    if (a.is_zero())
        throw Error(ErrorKind::InvalidArgument, "u^" + std::to_string(n) + " = 1");
    return ideal_valuations(F, a, opts, cache);
}

IdealSplit split_An_Bn(QuadField const& F, QuadInt const& u, std::uint64_t n, FactorOptions const& opts,
                       FactorCache* cache) {
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "n must be positive");
    QuadInt a = quad_eval(cyclotomic(n), u);
    if (a.is_zero())
        throw Error(ErrorKind::InvalidArgument, "Phi_" + std::to_string(n) + "(u) = 0");
    return ideal_valuations(F, a, opts, cache);
}

} // namespace abcprat
