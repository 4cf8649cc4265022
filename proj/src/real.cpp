#include "abcprat/real.hpp"

#include <algorithm>
#include <vector>

namespace abcprat {

std::string Real::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return buf.data();
}

Real abs(Real const& x) {
    Real r(x.prec());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real sqrt(Real const& x) {
    Real r(x.prec());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log(Real const& x) {
    Real r(x.prec());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real exp(Real const& x) {
    Real r(x.prec());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow_ui(Real const& x, unsigned long e) {
    Real r(x.prec());
    mpfr_pow_ui(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

Real max(Real const& a, Real const& b) { return a < b ? b : a; }
Real min(Real const& a, Real const& b) { return b < a ? b : a; }

Real two_pow(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

Real abs(Complex const& z) {
    Real r(std::max(z.re.prec(), z.im.prec()));
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

} // namespace abcprat
