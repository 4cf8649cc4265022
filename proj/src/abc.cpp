#include "abcprat/abc.hpp"

#include "abcprat/error.hpp"
#include "abcprat/real.hpp"

#include <cmath>
#include <map>

namespace abcprat {

ArchimedeanLogs archimedean_logs(QuadField const& F, QuadInt const& x) {
    if (x.is_zero())
        throw Error(ErrorKind::InvalidArgument, "log of zero");
    if (x.d != F.d)
        throw Error(ErrorKind::MixedField, "element does not belong to Q(sqrt " + std::to_string(F.d) + ")");
    auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(x.x.get_mpz_t(), 2) + mpz_sizeinbase(x.y.get_mpz_t(), 2));
    mpfr_prec_t prec = 128 + 2 * bits;
    Real root = sqrt(Real(mpz_class(F.d), prec));
    Real X(x.x, prec), Y(x.y, prec);
    ArchimedeanLogs out;
    double err = 0;
    for (int s = 0; s < 2; ++s) {
        Real r = s == 0 ? root : -root;
        Real w = omega_is_half(F.d) ? (Real(1.0, prec) + r) / Real(2.0, prec) : r;
        Real v = abs(X + Y * w);
        // rounding error of x + y*w is below (|x| + 2|y| |w|) 2^(4-prec)
        Real bound = (abs(X) + Real(2.0, prec) * abs(Y) * abs(w)) * two_pow(4 - prec, prec);
        out.value[static_cast<std::size_t>(s)] = log(v).to_double();
        err = std::max(err, (bound / v).to_double(MPFR_RNDU) * 2 + 1e-15);
    }
    out.width = 2 * err;
    return out;
}

Height height(QuadField const& F, QuadInt const& a, QuadInt const& b, QuadInt const& c, FactorOptions const& opts,
              FactorCache* cache) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw Error(ErrorKind::InvalidArgument, "height needs nonzero a, b, c");
    std::array<ArchimedeanLogs, 3> arch{archimedean_logs(F, a), archimedean_logs(F, b), archimedean_logs(F, c)};
    Height h;
    for (std::size_t s = 0; s < 2; ++s) {
        double m = std::max({arch[0].value[s], arch[1].value[s], arch[2].value[s]});
        h.value += m;
    }
    h.width = std::max({arch[0].width, arch[1].width, arch[2].width}) * 2;

    // integral inputs: only primes dividing all three contribute, with -min v
    std::array<IdealSplit, 3> splits{ideal_valuations(F, a, opts, cache), ideal_valuations(F, b, opts, cache),
                                     ideal_valuations(F, c, opts, cache)};
    for (auto const& s : splits)
        if (!s.complete())
            throw Error(ErrorKind::PartialFactorization, "norm " + s.norm.get_str() + " is not fully factored");
    for (auto const& [P, v] : splits[0].prime_ideals) {
        unsigned vb = splits[1].valuation_at(P);
        unsigned vc = splits[2].valuation_at(P);
        unsigned low = std::min({v, vb, vc});
        if (low > 0)
            h.value -= low * log_abs(P.norm);
    }
    return h;
}

AbcTriple unit_triple(QuadField const& F, QuadInt const& u, std::uint64_t n, FactorOptions const& opts,
                      FactorCache* cache) {
    AbcTriple t;
    t.n = n;
    t.c = quad_pow(u, n);
    t.b = F.one();
    t.a = t.c - t.b;
    if (t.a.is_zero())
        throw Error(ErrorKind::InvalidArgument, "u^" + std::to_string(n) + " = 1");
    IdealSplit split = ideal_valuations(F, t.a, opts, cache);
    t.radical = radical_of_ideal(split);
    t.height = height(F, t.a, t.b, t.c, opts, cache);
    if (t.radical > 1)
        t.quality = t.height.value / log_abs(t.radical);
    return t;
}

std::vector<JnRow> jn_exponent_report(QuadField const& F, QuadInt const& u, std::uint64_t n_max,
                                      FactorOptions const& opts, FactorCache* cache) {
    std::vector<JnRow> rows;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        IdealSplit s = split_In_Jn(F, u, n, opts, cache);
        JnRow row;
        row.n = n;
        row.norm = s.norm;
        row.norm_I = s.squarefree_norm;
        row.norm_J = s.squarefull_norm;
        row.status = s.status;
        if (row.norm_J > 1 && row.norm > 1)
            row.theta = log_abs(row.norm_J) / log_abs(row.norm);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace abcprat
