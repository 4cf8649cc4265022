#pragma once

#include "abcprat/factor.hpp"
#include "abcprat/quadfield.hpp"

#include <vector>

namespace abcprat {

struct IdealFactor {
    PrimeIdealAboveP prime;
    unsigned valuation = 0;
};

/// Factorization of the principal ideal (element) into prime ideals. When
/// the norm could not be fully factored, `unfactored` holds the remaining
/// composite part of |N(element)| and the two norms cover only the primes
/// that were found.
struct IdealSplit {
    QuadInt element;
    mpz_class norm; // |N(element)|
    std::vector<IdealFactor> prime_ideals;
    mpz_class squarefree_norm = 1; // valuation exactly 1
    mpz_class squarefull_norm = 1; // valuation >= 2
    mpz_class unfactored = 1;
    FactorStatus status = FactorStatus::Complete;

    bool complete() const { return status == FactorStatus::Complete; }
    unsigned valuation_at(PrimeIdealAboveP const& P) const;
};

IdealSplit ideal_valuations(QuadField const& F, QuadInt const& alpha, FactorOptions const& opts = {},
                            FactorCache* cache = nullptr);

/// Product of N(P) over the prime ideals dividing the element.
mpz_class radical_of_ideal(IdealSplit const& split);

/// (u^n - 1) = I_n J_n.
IdealSplit split_In_Jn(QuadField const& F, QuadInt const& u, std::uint64_t n, FactorOptions const& opts = {},
                       FactorCache* cache = nullptr);
/// (Phi_n(u)) = A_n B_n.
IdealSplit split_An_Bn(QuadField const& F, QuadInt const& u, std::uint64_t n, FactorOptions const& opts = {},
                       FactorCache* cache = nullptr);

} // namespace abcprat
