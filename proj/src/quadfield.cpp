#include "abcprat/quadfield.hpp"

#include "abcprat/error.hpp"
#include "abcprat/factor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace abcprat {

namespace {

void require_same_field(QuadInt const& a, QuadInt const& b) {
    if (a.d != b.d || a.d == 0)
        throw Error(ErrorKind::MixedField, "operands belong to Q(sqrt " + std::to_string(a.d) + ") and Q(sqrt " +
                                               std::to_string(b.d) + ")");
}

std::string linear_form(mpz_class const& a, mpz_class const& b, std::string const& root) {
    std::string out;
    if (a != 0)
        out = a.get_str();
    if (b != 0) {
        mpz_class mag = abs(b);
        std::string term = (mag == 1 ? std::string() : mag.get_str() + "*") + root;
        if (out.empty())
            out = (b < 0 ? "-" : "") + term;
        else
            out += (b < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

mpz_class mod_pow_ui(mpz_class const& p, unsigned k) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
    return r;
}

mpz_class mod(mpz_class const& a, mpz_class const& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

bool omega_is_half(std::int64_t d) { return ((d % 4) + 4) % 4 == 1; }

IntPoly omega_minpoly(std::int64_t d) {
    if (omega_is_half(d))
        return IntPoly{-(d - 1) / 4, -1, 1};
    return IntPoly{-d, 0, 1};
}

std::string QuadInt::to_string() const {
    std::string root = "sqrt(" + std::to_string(d) + ")";
    if (!omega_is_half(d))
        return linear_form(x, y, root);
    // x + y(1+sqrt d)/2 = ((2x+y) + y sqrt d)/2
    mpz_class a = 2 * x + y;
    if (mpz_even_p(y.get_mpz_t()))
        return linear_form(a / 2, y / 2, root);
    return "(" + linear_form(a, y, root) + ")/2";
}

QuadInt operator+(QuadInt const& a, QuadInt const& b) {
    require_same_field(a, b);
    return {a.x + b.x, a.y + b.y, a.d};
}

QuadInt operator-(QuadInt const& a, QuadInt const& b) {
    require_same_field(a, b);
    return {a.x - b.x, a.y - b.y, a.d};
}

QuadInt operator-(QuadInt const& a) { return {-a.x, -a.y, a.d}; }

QuadInt operator*(QuadInt const& a, QuadInt const& b) { return quad_mul(a, b); }

QuadInt quad_mul(QuadInt const& a, QuadInt const& b) {
    require_same_field(a, b);
    mpz_class yy = a.y * b.y;
    mpz_class x = a.x * b.x;
    mpz_class y = a.x * b.y + a.y * b.x;
    if (omega_is_half(a.d)) {
        // omega^2 = omega + (d-1)/4
        x += yy * ((a.d - 1) / 4);
        y += yy;
    } else {
        x += yy * a.d;
    }
    return {x, y, a.d};
}

mpz_class quad_norm(QuadInt const& a) {
    if (omega_is_half(a.d))
        return a.x * a.x + a.x * a.y - a.y * a.y * ((a.d - 1) / 4);
    return a.x * a.x - a.y * a.y * a.d;
}

mpz_class quad_trace(QuadInt const& a) {
    if (omega_is_half(a.d))
        return 2 * a.x + a.y;
    return 2 * a.x;
}

QuadInt quad_conj(QuadInt const& a) {
    if (omega_is_half(a.d))
        return {a.x + a.y, -a.y, a.d};
    return {a.x, -a.y, a.d};
}

QuadInt quad_pow(QuadInt const& a, unsigned long e) {
    QuadInt result{1, 0, a.d};
    QuadInt base = a;
    while (e > 0) {
        if (e & 1)
            result = quad_mul(result, base);
        e >>= 1;
        if (e)
            base = quad_mul(base, base);
    }
    return result;
}

QuadInt quad_unit_inverse(QuadInt const& u) {
    mpz_class n = quad_norm(u);
    if (abs(n) != 1)
        throw Error(ErrorKind::NotAUnit, u.to_string() + " has norm " + n.get_str());
    QuadInt c = quad_conj(u);
    return n == 1 ? c : -c;
}

IntPoly quad_minpoly(QuadInt const& a) {
    return IntPoly(std::vector<mpz_class>{quad_norm(a), -quad_trace(a), 1});
}

QuadInt quad_eval(IntPoly const& f, QuadInt const& a) {
    QuadInt r{0, 0, a.d};
    for (int i = f.degree(); i >= 0; --i) {
        r = quad_mul(r, a);
        r.x += f.coeff(i);
    }
    return r;
}

std::string QuadField::omega_label() const {
    return omega_is_half(d) ? "(1+sqrt(" + std::to_string(d) + "))/2" : "sqrt(" + std::to_string(d) + ")";
}

std::uint64_t QuadField::p0() const {
    std::uint64_t n = 2 * static_cast<std::uint64_t>(disc) * class_number;
    std::uint64_t largest = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            largest = p;
            n /= p;
        }
    if (n > 1)
        largest = std::max(largest, n);
    return std::max<std::uint64_t>(3, largest);
}

QuadInt fundamental_unit(std::int64_t d) {
    bool half = omega_is_half(d);
    // continued fraction of (P + sqrt D)/Q, starting from omega
    mpz_class P = half ? 1 : 0;
    mpz_class Q = half ? 2 : 1;
    mpz_class D = d;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
    mpz_class p_prev = 1, p_cur = 0, q_prev = 0, q_cur = 1;
    for (;;) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), mpz_class(P + s).get_mpz_t(), Q.get_mpz_t());
        mpz_class p_next = a * p_prev + p_cur;
        mpz_class q_next = a * q_prev + q_cur;
        p_cur = p_prev;
        p_prev = p_next;
        q_cur = q_prev;
        q_prev = q_next;
        P = a * Q - P;
        Q = (D - P * P) / Q;
        // convergent p/q of omega: p - q*omega is a small unit iff its norm is +-1
        QuadInt small{p_prev, -q_prev, d};
        if (abs(quad_norm(small)) == 1)
            return quad_conj(small);
    }
}

std::uint64_t narrow_class_number(std::int64_t disc) {
    using Form = std::array<std::int64_t, 3>;
    std::int64_t D = disc;
    auto s = static_cast<std::int64_t>(mpz_class(sqrt(mpz_class(D))).get_si());
    if (s * s == D)
        throw Error(ErrorKind::InvalidArgument, "discriminant must not be a square");
    auto sq = [](__int128 v) { return v * v; };
    std::set<Form> reduced;
    for (std::int64_t b = 1; b <= s; ++b) {
        if (((b - D) % 2 + 2) % 2 != 0)
            continue;
        std::int64_t m = (D - b * b) / 4;
        for (std::int64_t A = 1; A <= (s + b) / 2 + 1; ++A) {
            bool lower = sq(2 * A + b) > D;
            bool upper = (2 * A - b < 0) || sq(2 * A - b) < D;
            if (!lower || !upper || m % A != 0)
                continue;
            std::int64_t C = m / A;
            for (Form f : {Form{A, b, -C}, Form{-A, b, C}}) {
                std::int64_t g = std::gcd(std::gcd(std::abs(f[0]), f[1]), std::abs(f[2]));
                if (g == 1)
                    reduced.insert(f);
            }
        }
    }
    std::set<Form> seen;
    std::uint64_t cycles = 0;
    for (Form const& start : reduced) {
        if (seen.contains(start))
            continue;
        ++cycles;
        Form f = start;
        while (!seen.contains(f)) {
            seen.insert(f);
            auto [a, b, c] = f;
            std::int64_t two_c = 2 * std::abs(c);
            std::int64_t lo = s + 1 - two_c;
            std::int64_t bp = ((-b % two_c) + two_c) % two_c;
            // shift into [lo, s]
            std::int64_t shift = lo - bp;
            std::int64_t k = shift >= 0 ? (shift + two_c - 1) / two_c : -((-shift) / two_c);
            bp += k * two_c;
            f = Form{c, bp, static_cast<std::int64_t>((sq(bp) - D) / (4 * static_cast<__int128>(c)))};
            if (!reduced.contains(f))
                throw Error(ErrorKind::InvalidArgument, "reduction cycle left the reduced set");
        }
    }
    return cycles;
}

QuadField make_field(std::int64_t d, std::optional<std::uint64_t> class_number_override) {
    if (d < 2)
        throw Error(ErrorKind::InvalidArgument, "real quadratic fields need d >= 2, got " + std::to_string(d));
    if (!is_squarefree_int(d))
        throw Error(ErrorKind::NotSquarefree, std::to_string(d) + " is not squarefree");
    QuadField F;
    F.d = d;
    F.disc = omega_is_half(d) ? d : 4 * d;
    F.fundamental_unit = fundamental_unit(d);
    F.unit_norm = static_cast<int>(quad_norm(F.fundamental_unit).get_si());
    if (class_number_override) {
        if (*class_number_override == 0)
            throw Error(ErrorKind::InvalidArgument, "class number must be positive");
        F.class_number = *class_number_override;
        F.class_number_supplied = true;
    } else {
        if (F.disc > max_class_number_disc)
            throw Error(ErrorKind::TooLargeDiscriminant,
                        "disc " + std::to_string(F.disc) + " exceeds " + std::to_string(max_class_number_disc) +
                            "; supply the class number explicitly");
        std::uint64_t hplus = narrow_class_number(F.disc);
        F.class_number = F.unit_norm == -1 ? hplus : hplus / 2;
    }
    return F;
}

std::string_view to_string(Splitting s) {
    switch (s) {
    case Splitting::Split:
        return "split";
    case Splitting::Inert:
        return "inert";
    case Splitting::Ramified:
        return "ramified";
    }
    return "?";
}

std::string PrimeIdealAboveP::label() const {
    switch (splitting) {
    case Splitting::Split:
        return "(" + p.get_str() + ", w - " + mod(hensel_root, p).get_str() + ")";
    case Splitting::Inert:
        return "(" + p.get_str() + ")";
    case Splitting::Ramified:
        return "(" + p.get_str() + ", w - " + hensel_root.get_str() + ")";
    }
    return "?";
}

mpz_class hensel_lift(std::int64_t d, mpz_class const& r0, mpz_class const& p, unsigned k) {
    IntPoly f = omega_minpoly(d);
    IntPoly df = f.derivative();
    mpz_class target = mod_pow_ui(p, k);
    mpz_class r = mod(r0, p);
    mpz_class m = p;
    while (m < target) {
        m = std::min<mpz_class>(m * m, target);
        mpz_class inv;
        if (!mpz_invert(inv.get_mpz_t(), mpz_class(df.eval(r)).get_mpz_t(), m.get_mpz_t()))
            throw Error(ErrorKind::RamifiedUnsupported, "Hensel lift at a ramified prime");
        r = mod(r - f.eval(r) * inv, m);
    }
    return mod(r, target);
}

std::vector<PrimeIdealAboveP> split_prime(QuadField const& F, mpz_class const& p) {
    if (p < 2)
        throw Error(ErrorKind::InvalidArgument, "split_prime needs a prime");
    mpz_class D = F.disc;
    IntPoly f = omega_minpoly(F.d);
    if (mpz_divisible_p(D.get_mpz_t(), p.get_mpz_t())) {
        auto roots = roots_mod_p(f, p);
        return {PrimeIdealAboveP{p, Splitting::Ramified, 1, p, roots.empty() ? mpz_class(0) : roots.front()}};
    }
    int k = mpz_kronecker(D.get_mpz_t(), p.get_mpz_t());
    if (k == -1)
        return {PrimeIdealAboveP{p, Splitting::Inert, 2, p * p, 0}};
    std::vector<PrimeIdealAboveP> out;
    for (auto const& r : roots_mod_p(f, p))
        out.push_back(PrimeIdealAboveP{p, Splitting::Split, 1, p, hensel_lift(F.d, r, p, 2)});
    if (out.size() != 2)
        throw Error(ErrorKind::InvalidArgument, "split prime " + p.get_str() + " did not yield two roots");
    return out;
}

PrimeIdealAboveP conjugate_prime(QuadField const& F, PrimeIdealAboveP const& P) {
    if (P.splitting != Splitting::Split)
        return P;
    mpz_class m = P.p * P.p;
    mpz_class r = omega_is_half(F.d) ? mod(1 - P.hensel_root, m) : mod(-P.hensel_root, m);
    PrimeIdealAboveP Q = P;
    Q.hensel_root = r;
    return Q;
}

Residue reduce(QuadField const& F, QuadInt const& a, PrimeIdealAboveP const& P, unsigned j) {
    if (a.d != F.d)
        throw Error(ErrorKind::MixedField, "element and prime ideal live in different fields");
    if (P.splitting == Splitting::Ramified)
        throw Error(ErrorKind::RamifiedUnsupported, "prime " + P.p.get_str() + " is ramified");
    Residue r;
    r.modulus = mod_pow_ui(P.p, j);
    r.d = F.d;
    if (P.splitting == Splitting::Split) {
        r.split = true;
        mpz_class root = j <= 2 ? mod(P.hensel_root, r.modulus) : hensel_lift(F.d, P.hensel_root, P.p, j);
        r.a = mod(a.x + a.y * root, r.modulus);
        r.b = 0;
    } else {
        r.a = mod(a.x, r.modulus);
        r.b = mod(a.y, r.modulus);
    }
    return r;
}

Residue residue_mul(Residue const& u, Residue const& v) {
    Residue r = u;
    if (u.split) {
        r.a = mod(u.a * v.a, u.modulus);
        return r;
    }
    mpz_class bb = u.b * v.b;
    mpz_class a = u.a * v.a;
    mpz_class b = u.a * v.b + u.b * v.a;
    if (omega_is_half(u.d)) {
        a += bb * ((u.d - 1) / 4);
        b += bb;
    } else {
        a += bb * u.d;
    }
    r.a = mod(a, u.modulus);
    r.b = mod(b, u.modulus);
    return r;
}

Residue residue_pow(Residue base, mpz_class const& e) {
    if (e < 0)
        throw Error(ErrorKind::InvalidArgument, "negative exponent");
    Residue r = base;
    r.a = mod(1, base.modulus);
    r.b = 0;
    std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = residue_mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = residue_mul(r, base);
    }
    return r;
}

Residue unit_pow_mod_p2(QuadField const& F, QuadInt const& u, mpz_class const& e, PrimeIdealAboveP const& P) {
    return residue_pow(reduce(F, u, P, 2), e);
}

bool in_prime_power(QuadField const& F, QuadInt const& alpha, PrimeIdealAboveP const& P, unsigned j) {
    return reduce(F, alpha, P, j).is_zero();
}

mpz_class multiplicative_order(QuadField const& F, QuadInt const& u, PrimeIdealAboveP const& P) {
    Residue r = reduce(F, u, P, 1);
    if (r.is_zero())
        throw Error(ErrorKind::InvalidArgument, "element is not invertible modulo " + P.label());
    mpz_class group = P.norm - 1;
    std::vector<Factorization> parts;
    if (P.splitting == Splitting::Split) {
        parts.push_back(factor(P.p - 1));
    } else {
        parts.push_back(factor(P.p - 1));
        parts.push_back(factor(P.p + 1));
    }
    std::set<mpz_class> primes;
    for (auto const& f : parts) {
        if (!f.complete())
            throw Error(ErrorKind::PartialFactorization, "could not factor N(P) - 1 for " + P.label());
        for (auto const& [q, e] : f.factors)
            primes.insert(q);
    }
    mpz_class order = group;
    for (auto const& q : primes) {
        while (mpz_divisible_p(order.get_mpz_t(), q.get_mpz_t())) {
            mpz_class smaller = order / q;
            if (!residue_pow(r, smaller).is_one())
                break;
            order = smaller;
        }
    }
    return order;
}

bool has_order(QuadField const& F, QuadInt const& u, PrimeIdealAboveP const& P, std::uint64_t n) {
    if (n == 0)
        return false;
    Residue r = reduce(F, u, P, 1);
    if (!residue_pow(r, n).is_one())
        return false;
    std::uint64_t m = n;
    for (std::uint64_t q = 2; q * q <= m || m > 1; ++q) {
        if (q * q > m)
            q = m;
        if (m % q != 0)
            continue;
        while (m % q == 0)
            m /= q;
        if (residue_pow(r, n / q).is_one())
            return false;
    }
    return true;
}

} // namespace abcprat
