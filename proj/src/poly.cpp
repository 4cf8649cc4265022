#include "abcprat/poly.hpp"

#include "abcprat/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace abcprat {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::monomial(mpz_class const& c, int degree) {
    std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(unsigned n) {
    std::vector<mpz_class> v(n + 1);
    v[0] = -1;
    v[n] += 1;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

mpz_class const& IntPoly::lc() const {
    if (is_zero())
        throw Error(ErrorKind::InvalidArgument, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::eval(mpz_class const& x) const {
    mpz_class r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + *it;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1)
        return {};
    std::vector<mpz_class> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (auto const& c : coeffs_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero())
        return {};
    mpz_class g = content();
    if (lc() < 0)
        g = -g;
    std::vector<mpz_class> v = coeffs_;
    for (auto& c : v)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
    std::vector<mpz_class> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negated_argument() const {
    std::vector<mpz_class> v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2)
        v[i] = -v[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& c : v)
        c = -c;
    return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(IntPoly const& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(IntPoly const& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(mpz_class const& c) {
    for (auto& x : coeffs_)
        x *= c;
    normalize();
    return *this;
}

IntPoly operator*(IntPoly const& a, IntPoly const& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string(char var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        mpz_class c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        bool neg = c < 0;
        mpz_class mag = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool show_coeff = mag != 1 || i == 0;
        if (show_coeff)
            out += mag.get_str();
        if (i > 0) {
            if (show_coeff)
                out += '*';
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyDivision divide(IntPoly const& a, IntPoly const& b) {
    if (b.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    std::vector<mpz_class> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db)
        return {IntPoly{}, a};
    std::vector<mpz_class> q(static_cast<std::size_t>(da - db) + 1);
    mpz_class const& lb = b.lc();
    for (int i = da; i >= db; --i) {
        mpz_class& top = r[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw Error(ErrorKind::InvalidArgument, "division not defined over Z");
        mpz_class t = top / lb;
        q[static_cast<std::size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), t.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly exact_quotient(IntPoly const& a, IntPoly const& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero())
        throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
}

IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b) {
    if (b.is_zero())
        throw Error(ErrorKind::InvalidArgument, "pseudo-remainder by the zero polynomial");
    int db = b.degree();
    if (a.degree() < db)
        return a;
    std::vector<mpz_class> r = a.coeffs();
    mpz_class const& lb = b.lc();
    // one multiplication by lc(b) per eliminated degree: lc(b)^(da-db+1) in total
    for (int i = a.degree(); i >= db; --i) {
        mpz_class top = r[static_cast<std::size_t>(i)];
        for (auto& c : r)
            c *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), top.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

mpz_class pow_ui(mpz_class const& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

IntPoly divexact_scalar(IntPoly const& p, mpz_class const& c) {
    std::vector<mpz_class> v = p.coeffs();
    for (auto& x : v)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(v));
}

} // namespace

IntPoly cyclotomic(std::uint64_t n) {
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "cyclotomic(0) is undefined");
    static std::mutex mu;
    static std::map<std::uint64_t, IntPoly> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
    }
    IntPoly p = IntPoly::x_pow_minus_one(static_cast<unsigned>(n));
    for (std::uint64_t d : divisors(n))
        if (d < n)
            p = exact_quotient(p, cyclotomic(d));
    std::lock_guard lock(mu);
    memo.emplace(n, p);
    return p;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "euler_phi(0) is undefined");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::vector<std::uint64_t> phi_half_sieve(std::uint64_t limit) {
    if (limit == 0)
        throw Error(ErrorKind::InvalidArgument, "phi_half_sieve needs a positive bound");
    std::vector<std::uint64_t> phi(limit + 1);
    for (std::uint64_t i = 0; i <= limit; ++i)
        phi[i] = i;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (phi[i] == i)
            for (std::uint64_t j = i; j <= limit; j += i)
                phi[j] -= phi[j] / i;
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (2 * phi[n] >= n)
            out.push_back(n);
    return out;
}

mpz_class sylvester_resultant(IntPoly const& f, IntPoly const& g) {
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorKind::InvalidArgument, "resultant of the zero polynomial");
    IntPoly a = f, b = g;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1)
            sign = -1;
    }
    if (b.degree() == 0)
        return sign * pow_ui(b.lc(), static_cast<unsigned long>(a.degree()));

    mpz_class ca = a.content(), cb = b.content();
    a = divexact_scalar(a, ca);
    b = divexact_scalar(b, cb);
    mpz_class t = pow_ui(ca, static_cast<unsigned long>(b.degree())) *
                  pow_ui(cb, static_cast<unsigned long>(a.degree()));
    mpz_class gg = 1, h = 1;
    for (;;) {
        int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1)
            sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        a = b;
        if (r.is_zero())
            return 0;
        b = divexact_scalar(r, gg * pow_ui(h, static_cast<unsigned long>(delta)));
        gg = a.lc();
        if (delta > 0) {
            mpz_class num = pow_ui(gg, static_cast<unsigned long>(delta));
            mpz_class den = pow_ui(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() > 0)
            continue;
        mpz_class num = pow_ui(b.lc(), static_cast<unsigned long>(a.degree()));
        mpz_class den = pow_ui(h, static_cast<unsigned long>(a.degree() - 1));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return sign * t * h;
    }
}

mpz_class resultant(IntPoly const& f, IntPoly const& g) { return sylvester_resultant(g, f); }

IntPoly poly_gcd(IntPoly const& f, IntPoly const& g) {
    if (f.is_zero() && g.is_zero())
        throw Error(ErrorKind::InvalidArgument, "gcd(0, 0) is undefined");
    IntPoly a = f.primitive_part();
    IntPoly b = g.primitive_part();
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    if (a.degree() == 0)
        return IntPoly{1};
    return a.primitive_part();
}

bool is_squarefree(IntPoly const& f) {
    if (f.degree() < 1)
        return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

namespace {

int sign_changes(std::vector<IntPoly> const& seq, mpz_class const& x) {
    int changes = 0;
    int prev = 0;
    for (auto const& p : seq) {
        int s = sgn(p.eval(x));
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

int count_real_roots(IntPoly const& f, mpz_class const& lo, mpz_class const& hi) {
    if (f.degree() < 1)
        return 0;
    std::vector<IntPoly> seq{f.primitive_part(), f.derivative().primitive_part()};
    while (seq.back().degree() > 0) {
        IntPoly const& a = seq[seq.size() - 2];
        IntPoly const& b = seq.back();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero())
            break;
        // prem = lc(b)^(delta+1) * rem; keep only the sign of -rem
        int delta_plus_one = a.degree() - b.degree() + 1;
        bool flip = b.lc() < 0 && delta_plus_one % 2 == 1;
        IntPoly next = flip ? r : -r;
        mpz_class c = next.content();
        seq.push_back(divexact_scalar(next, c));
    }
    return sign_changes(seq, lo) - sign_changes(seq, hi);
}

IntPoly power_charpoly(IntPoly const& f, unsigned k) {
    if (k == 0)
        throw Error(ErrorKind::InvalidArgument, "power_charpoly needs k >= 1");
    if (!f.is_monic() || f.degree() < 1)
        throw Error(ErrorKind::InvalidArgument, "power_charpoly needs a monic polynomial");
    int m = f.degree();
    std::vector<mpz_class> values(static_cast<std::size_t>(m) + 1);
    for (int x0 = 0; x0 <= m; ++x0) {
        std::vector<mpz_class> h(k + 1);
        h[0] = x0;
        h[k] -= 1;
        values[static_cast<std::size_t>(x0)] = resultant(IntPoly(std::move(h)), f);
    }
    // forward differences at 0 divided by j! give the Newton coefficients
    std::vector<mpz_class> newton(values.size());
    std::vector<mpz_class> diff = values;
    mpz_class fact = 1;
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (j > 0)
            fact *= static_cast<unsigned long>(j);
        mpz_divexact(newton[j].get_mpz_t(), diff[0].get_mpz_t(), fact.get_mpz_t());
        for (std::size_t i = 0; i + 1 < diff.size(); ++i)
            diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    IntPoly result;
    IntPoly basis{1};
    for (std::size_t j = 0; j < newton.size(); ++j) {
        result += basis * newton[j];
        basis = basis * IntPoly{-static_cast<long>(j), 1};
    }
    return result;
}

namespace {

// Dense polynomials over F_p, ascending coefficients in [0, p).
using ModPoly = std::vector<mpz_class>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ModPoly mod_rem(ModPoly a, ModPoly const& m, mpz_class const& p) {
    // m is monic
    int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        mpz_class t = a[static_cast<std::size_t>(i)];
        if (t == 0)
            continue;
        for (int j = 0; j <= dm; ++j) {
            auto& c = a[static_cast<std::size_t>(i - dm + j)];
            c -= t * m[static_cast<std::size_t>(j)];
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        }
    }
    trim(a);
    return a;
}

ModPoly mod_mul(ModPoly const& a, ModPoly const& b, ModPoly const& m, mpz_class const& p) {
    if (a.empty() || b.empty())
        return {};
    ModPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    for (auto& c : r)
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    return mod_rem(std::move(r), m, p);
}

ModPoly mod_pow(ModPoly base, mpz_class e, ModPoly const& m, mpz_class const& p) {
    ModPoly r{1};
    r = mod_rem(r, m, p);
    base = mod_rem(std::move(base), m, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mod_mul(r, r, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mod_mul(r, base, m, p);
    }
    return r;
}

ModPoly make_monic(ModPoly a, mpz_class const& p) {
    trim(a);
    if (a.empty())
        return a;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
    for (auto& c : a) {
        c *= inv;
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    }
    return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, mpz_class const& p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        b = make_monic(std::move(b), p);
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

ModPoly mod_div(ModPoly a, ModPoly const& m, mpz_class const& p) {
    // exact quotient by monic m
    int dm = static_cast<int>(m.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    ModPoly q(static_cast<std::size_t>(da - dm) + 1);
    for (int i = da; i >= dm; --i) {
        mpz_class t = a[static_cast<std::size_t>(i)];
        q[static_cast<std::size_t>(i - dm)] = t;
        if (t == 0)
            continue;
        for (int j = 0; j <= dm; ++j) {
            auto& c = a[static_cast<std::size_t>(i - dm + j)];
            c -= t * m[static_cast<std::size_t>(j)];
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        }
    }
    trim(q);
    return q;
}

void split_linear(ModPoly const& g, mpz_class const& p, gmp_randclass& rng, std::vector<mpz_class>& out) {
    if (g.size() <= 1)
        return;
    if (g.size() == 2) {
        mpz_class r = -g[0];
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        out.push_back(r);
        return;
    }
    mpz_class half = (p - 1) / 2;
    for (;;) {
        mpz_class a = rng.get_z_range(p);
        ModPoly w = mod_pow(ModPoly{a, 1}, half, g, p);
        if (w.empty())
            w = {0};
        w[0] -= 1;
        mpz_mod(w[0].get_mpz_t(), w[0].get_mpz_t(), p.get_mpz_t());
        trim(w);
        ModPoly d = mod_gcd(g, w, p);
        if (d.size() > 1 && d.size() < g.size()) {
            split_linear(d, p, rng, out);
            split_linear(mod_div(g, d, p), p, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<mpz_class> roots_mod_p(IntPoly const& f, mpz_class const& p, std::uint64_t seed) {
    if (p < 2)
        throw Error(ErrorKind::InvalidArgument, "roots_mod_p needs a prime modulus");
    ModPoly fp;
    for (auto const& c : f.coeffs()) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        fp.push_back(r);
    }
    trim(fp);
    if (fp.empty())
        throw Error(ErrorKind::InvalidArgument, "polynomial vanishes identically mod p");
    std::vector<mpz_class> roots;
    if (fp.size() == 1)
        return roots;
    if (p < 64) {
        IntPoly reduced(fp);
        for (unsigned long x = 0; x < p.get_ui(); ++x) {
            mpz_class v = reduced.eval(x);
            if (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()))
                roots.emplace_back(x);
        }
        return roots;
    }
    fp = make_monic(std::move(fp), p);
    ModPoly xp = mod_pow(ModPoly{0, 1}, p, fp, p);
    xp.resize(std::max<std::size_t>(xp.size(), 2));
    xp[1] -= 1;
    mpz_mod(xp[1].get_mpz_t(), xp[1].get_mpz_t(), p.get_mpz_t());
    trim(xp);
    ModPoly g = mod_gcd(fp, xp, p);
    if (g.size() > 1 && g[0] == 0) {
        roots.emplace_back(0);
        g = mod_div(g, ModPoly{0, 1}, p);
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed) ^ 0x9e3779b97f4a7c15ULL);
    split_linear(g, p, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace abcprat
