#pragma once

#include "abcprat/ideal.hpp"

#include <array>
#include <optional>

namespace abcprat {

/// A logarithmic height with an absolute error bound on the value.
struct Height {
    double value = 0;
    double width = 0;
};

/// log |sigma_1(x)| and log |sigma_2(x)| for the embeddings sending sqrt d
/// to +sqrt d and -sqrt d, with an absolute error bound.
struct ArchimedeanLogs {
    std::array<double, 2> value{};
    double width = 0;
};

ArchimedeanLogs archimedean_logs(QuadField const& F, QuadInt const& x);

/// Sum over all places of log max(|a|_v, |b|_v, |c|_v); real places have
/// weight 1, a finite place P contributes max(-v_P) log N(P).
Height height(QuadField const& F, QuadInt const& a, QuadInt const& b, QuadInt const& c, FactorOptions const& opts = {},
              FactorCache* cache = nullptr);

struct AbcTriple {
    QuadInt a, b, c;
    Height height;
    mpz_class radical = 1;
    std::optional<double> quality; // height / log radical, when radical > 1
    std::optional<std::uint64_t> n;
};

/// (u^n - 1) + 1 = u^n. Only (u^n - 1) contributes to the radical.
AbcTriple unit_triple(QuadField const& F, QuadInt const& u, std::uint64_t n, FactorOptions const& opts = {},
                      FactorCache* cache = nullptr);

struct JnRow {
    std::uint64_t n = 0;
    mpz_class norm; // |N(u^n - 1)|
    mpz_class norm_I;
    mpz_class norm_J;
    double theta = 0; // log N(J_n) / log |N(u^n - 1)|
    FactorStatus status = FactorStatus::Complete;
};

std::vector<JnRow> jn_exponent_report(QuadField const& F, QuadInt const& u, std::uint64_t n_max,
                                      FactorOptions const& opts = {}, FactorCache* cache = nullptr);

} // namespace abcprat
