#include "abcprat/numerics.hpp"

#include "abcprat/error.hpp"

#include <cmath>
#include <numbers>

namespace abcprat {

namespace {

Real with_prec(Real const& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
}

struct HornerResult {
    Complex value;
    Complex derivative;
};

HornerResult horner(std::vector<Real> const& coeffs, Complex const& z) {
    mpfr_prec_t prec = z.re.prec();
    Complex p(prec), dp(prec);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z;
        p.re = p.re + coeffs[i];
    }
    return {p, dp};
}

std::vector<Real> real_coeffs(IntPoly const& f, mpfr_prec_t prec) {
    std::vector<Real> out;
    for (auto const& c : f.coeffs())
        out.emplace_back(c, prec);
    return out;
}

std::vector<Complex> initial_guesses(int m, mpfr_prec_t prec) {
    std::vector<Complex> z;
    for (int i = 0; i < m; ++i) {
        double angle = 2.0 * std::numbers::pi * i / m + 0.4;
        z.emplace_back(Real(std::cos(angle), prec), Real(std::sin(angle), prec));
    }
    return z;
}

// Simultaneous Aberth-Ehrlich iteration at fixed precision.
void aberth(std::vector<Real> const& coeffs, std::vector<Complex>& z, mpfr_prec_t prec) {
    std::size_t m = z.size();
    Real stop = two_pow(-static_cast<long>(prec) + 8, prec);
    int max_iter = 100 + 4 * static_cast<int>(prec);
    for (int iter = 0; iter < max_iter; ++iter) {
        Real largest(prec);
        for (std::size_t i = 0; i < m; ++i) {
            auto [p, dp] = horner(coeffs, z[i]);
            if (abs(dp).sign() == 0) {
                z[i].re = z[i].re + two_pow(-20, prec);
                largest = Real(1.0, prec);
                continue;
            }
            Complex ratio = p / dp;
            Complex sum(prec);
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i)
                    continue;
                Complex diff = z[i] - z[j];
                if (abs(diff).sign() == 0)
                    continue;
                sum = sum + Complex(Real(1.0, prec), Real(prec)) / diff;
            }
            Complex one(Real(1.0, prec), Real(prec));
            Complex w = ratio / (one - ratio * sum);
            z[i] = z[i] - w;
            Real rel = abs(w) / max(Real(1.0, prec), abs(z[i]));
            largest = max(largest, rel);
        }
        if (largest < stop)
            return;
    }
}

bool discs_disjoint(std::vector<Complex> const& centers, std::vector<Real> const& radii) {
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (!(abs(centers[i] - centers[j]) > radii[i] + radii[j]))
                return false;
    return true;
}

// Sturm-decidable reformulation for a palindromic g of degree 2M:
// g(x) = x^M h(x + 1/x), and conjugates on the unit circle other than +-1
// correspond to real roots of h in (-2, 2).
IntPoly trace_polynomial(IntPoly const& g) {
    int M = g.degree() / 2;
    IntPoly h = IntPoly::constant(g.coeff(M));
    IntPoly d_prev{2};
    IntPoly d_cur{0, 1};
    IntPoly t{0, 1};
    for (int j = 1; j <= M; ++j) {
        h += d_cur * g.coeff(M + j);
        IntPoly next = t * d_cur - d_prev;
        d_prev = std::move(d_cur);
        d_cur = std::move(next);
    }
    return h;
}

bool is_palindromic(IntPoly const& g) {
    int n = g.degree();
    for (int i = 0; i <= n; ++i)
        if (g.coeff(i) != g.coeff(n - i))
            return false;
    return true;
}

} // namespace

Real RootEnclosure::modulus_lower() const { return abs(center) - radius; }
Real RootEnclosure::modulus_upper() const { return abs(center) + radius; }

int RootEnclosure::side_of_unit_circle() const {
    Real one(1.0, radius.prec());
    if (modulus_lower() > one)
        return 1;
    if (modulus_upper() < one)
        return -1;
    return 0;
}

AlgebraicUnit certify_roots(IntPoly const& minpoly, double tol, mpfr_prec_t precision_cap, std::string label) {
    if (minpoly.degree() < 1)
        throw Error(ErrorKind::InvalidArgument, "minimal polynomial must have positive degree");
    if (!minpoly.is_monic())
        throw Error(ErrorKind::NotAUnit, minpoly.to_string() + " is not monic");
    if (abs(minpoly.coeff(0)) != 1)
        throw Error(ErrorKind::NotAUnit, minpoly.to_string() + " has constant term " + minpoly.coeff(0).get_str());
    if (!is_squarefree(minpoly))
        throw Error(ErrorKind::NotSquarefree, minpoly.to_string() + " has a repeated root");

    AlgebraicUnit u;
    u.minpoly = minpoly;
    u.degree = minpoly.degree();
    u.label = label.empty() ? minpoly.to_string() : std::move(label);
    int m = u.degree;

    if (m == 1) {
        mpfr_prec_t prec = 128;
        Complex c(Real(mpz_class(-minpoly.coeff(0)), prec), Real(prec));
        u.roots.emplace_back(std::move(c), Real(prec), true);
        u.precision = prec;
        return u;
    }

    std::vector<Complex> z;
    for (mpfr_prec_t prec = 128; prec <= precision_cap; prec *= 2) {
        std::vector<Real> coeffs = real_coeffs(minpoly, prec);
        if (z.empty()) {
            z = initial_guesses(m, prec);
        } else {
            for (auto& w : z)
                w = Complex(with_prec(w.re, prec), with_prec(w.im, prec));
        }
        aberth(coeffs, z, prec);

        Real rounding = two_pow(-static_cast<long>(prec), prec) * Real(8.0 * (m + 1), prec);
        Real slack = Real(1.0, prec) + two_pow(-static_cast<long>(prec) / 2, prec);
        std::vector<Real> radii;
        bool degenerate = false;
        for (int i = 0; i < m; ++i) {
            Real bound(prec);
            Real zabs = abs(z[static_cast<std::size_t>(i)]);
            for (int k = m; k >= 0; --k)
                bound = bound * zabs + abs(coeffs[static_cast<std::size_t>(k)]);
            Real fz = abs(horner(coeffs, z[static_cast<std::size_t>(i)]).value);
            Real den(1.0, prec);
            for (int j = 0; j < m; ++j)
                if (j != i)
                    den = den * abs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            if (den.sign() == 0) {
                degenerate = true;
                break;
            }
            radii.push_back(Real(static_cast<double>(m), prec) * (fz + bound * rounding) / den * slack);
        }
        if (degenerate || !discs_disjoint(z, radii))
            continue;

        std::vector<Complex> centers = z;
        std::vector<bool> real(static_cast<std::size_t>(m), false);
        std::vector<Real> final_radii = radii;
        for (int i = 0; i < m; ++i) {
            auto si = static_cast<std::size_t>(i);
            Complex axis(z[si].re, Real(prec));
            Real grown = abs(z[si].im) + radii[si];
            bool isolated = true;
            for (int j = 0; j < m && isolated; ++j)
                if (j != i && !(abs(axis - z[static_cast<std::size_t>(j)]) > grown + radii[static_cast<std::size_t>(j)]))
                    isolated = false;
            if (isolated) {
                centers[si] = axis;
                final_radii[si] = grown;
                real[si] = true;
            }
        }
        if (!discs_disjoint(centers, final_radii))
            continue;
        Real tolerance(tol, prec);
        bool tight = true;
        for (auto const& r : final_radii)
            tight = tight && r < tolerance;
        if (!tight)
            continue;

        for (int i = 0; i < m; ++i) {
            auto si = static_cast<std::size_t>(i);
            u.roots.emplace_back(centers[si], final_radii[si], real[si]);
        }
        u.precision = prec;
        return u;
    }
    throw Error(ErrorKind::NonConvergence, "could not isolate the roots of " + minpoly.to_string() + " within " +
                                               std::to_string(precision_cap) + " bits");
}

std::string_view to_string(SMembership s) {
    switch (s) {
    case SMembership::Yes:
        return "yes";
    case SMembership::No:
        return "no";
    case SMembership::Undecided:
        return "undecided";
    }
    return "?";
}

SMembership is_in_S(AlgebraicUnit const& u) {
    IntPoly const& f = u.minpoly;
    IntPoly g = poly_gcd(f, f.reversed());
    if (g.degree() == 0)
        return SMembership::Yes;

    // phi(d) >= sqrt(d/2), so only d <= 2 deg(g)^2 can contribute
    auto bound = static_cast<std::uint64_t>(2 * g.degree() * g.degree() + 2);
    for (std::uint64_t d = 1; d <= bound; ++d) {
        if (euler_phi(d) > static_cast<std::uint64_t>(g.degree()))
            continue;
        if (divide(g, cyclotomic(d)).remainder.is_zero())
            return SMembership::No;
    }

    bool all_off = true;
    for (auto const& r : u.roots)
        all_off = all_off && r.side_of_unit_circle() != 0;
    if (all_off)
        return SMembership::Yes;

    if (g.degree() % 2 != 0 || !is_palindromic(g))
        return SMembership::Undecided;
    IntPoly h = trace_polynomial(g);
    return count_real_roots(h, -2, 2) > 0 ? SMembership::No : SMembership::Yes;
}

AlgebraicUnit separate_from_circle(AlgebraicUnit const& u) {
    AlgebraicUnit v = u;
    double tol = 1e-30;
    for (;;) {
        bool separated = true;
        for (auto const& r : v.roots)
            separated = separated && r.side_of_unit_circle() != 0;
        if (separated)
            return v;
        tol *= 1e-20;
        if (tol == 0.0)
            throw Error(ErrorKind::NonConvergence, "conjugates of " + u.label + " not separated from |z| = 1");
        v = certify_roots(u.minpoly, tol, default_precision_cap, u.label);
    }
}

bool is_pisot(AlgebraicUnit const& u) {
    SMembership s = is_in_S(u);
    if (s == SMembership::No)
        return false;
    if (s == SMembership::Undecided)
        throw Error(ErrorKind::NonConvergence, "circle membership of " + u.label + " is undecided");
    AlgebraicUnit v = separate_from_circle(u);
    int outside = 0;
    RootEnclosure const* big = nullptr;
    for (auto const& r : v.roots) {
        if (r.side_of_unit_circle() > 0) {
            ++outside;
            big = &r;
        }
    }
    return outside == 1 && big->real && big->center.re.sign() > 0;
}

GrowthConstants growth_constants(AlgebraicUnit const& u) {
    if (is_in_S(u) != SMembership::Yes)
        throw Error(ErrorKind::NotInS, u.label + " is not certified to lie in S");
    AlgebraicUnit v = separate_from_circle(u);
    mpfr_prec_t prec = 256;
    int m = v.degree;

    Real a(prec), beta(prec);
    std::vector<Real> inside_upper, outside_lower;
    for (auto const& r : v.roots) {
        Real lo = with_prec(r.modulus_lower(), prec);
        Real hi = with_prec(r.modulus_upper(), prec);
        if (r.side_of_unit_circle() > 0) {
            outside_lower.push_back(lo);
            a = max(a, lo);
        } else {
            inside_upper.push_back(hi);
        }
        beta = max(beta, hi);
    }
    if (outside_lower.empty())
        throw Error(ErrorKind::NotInS, u.label + " has no conjugate outside the unit circle");

    Real half(0.5, prec), two(2.0, prec), one(1.0, prec);
    Real scale = two_pow(1 - m, prec);
    unsigned k = 0;
    for (unsigned cand = 1; cand <= 100000 && k == 0; ++cand) {
        bool ok = (pow_ui(a, cand) - one) * scale > one;
        for (auto const& x : inside_upper)
            ok = ok && pow_ui(x, cand) <= half;
        for (auto const& x : outside_lower)
            ok = ok && pow_ui(x, cand) >= two;
        if (ok)
            k = cand;
    }
    if (k == 0)
        throw Error(ErrorKind::NonConvergence, "no admissible power k found for " + u.label);

    GrowthConstants lc;
    lc.degree = m;
    lc.a = a.to_double(MPFR_RNDD);
    lc.beta = beta.to_double(MPFR_RNDU);
    lc.k = k;
    Real beta_k = pow_ui(beta, k);
    lc.beta_k = beta_k.to_double(MPFR_RNDU);
    Real c = log((pow_ui(a, k) - one) * scale) * half;
    lc.c = c.to_double(MPFR_RNDD);
    Real log_beta_k = log(beta_k);
    Real eps_max = c / (Real(2.0 * m, prec) * log_beta_k);
    lc.epsilon_max = eps_max.to_double(MPFR_RNDD);
    Real eps = eps_max * half;
    lc.epsilon = eps.to_double(MPFR_RNDD);

    // N(A_n) > n^m once n (c - 2 m eps log beta_k) > m log n; the left side
    // minus the right is increasing beyond n = m / slope
    double slope = (c - Real(2.0 * m, prec) * eps * log_beta_k).to_double(MPFR_RNDD);
    auto holds = [&](std::uint64_t n) { return slope * static_cast<double>(n) > m * std::log(static_cast<double>(n)); };
    auto n = static_cast<std::uint64_t>(std::ceil(m / slope));
    if (n < 1)
        n = 1;
    while (!holds(n))
        ++n;
    while (n > 1 && holds(n - 1))
        --n;
    lc.n0 = n;

    Real beta_km = pow_ui(beta_k, static_cast<unsigned long>(m));
    lc.gamma0 = (two * beta_km).to_double(MPFR_RNDU);
    Real gamma = beta_km * exp(log(two) * Real(static_cast<double>(m) / static_cast<double>(lc.n0), prec));
    lc.gamma = (gamma * Real(1.0 + 1e-12, prec)).to_double(MPFR_RNDU);
    return lc;
}

IntPoly inverse_minpoly(IntPoly const& f) {
    IntPoly r = f.reversed();
    return r.lc() < 0 ? -r : r;
}

IntPoly negated_minpoly(IntPoly const& f) {
    IntPoly g = f.negated_argument();
    return g.lc() < 0 ? -g : g;
}

} // namespace abcprat
