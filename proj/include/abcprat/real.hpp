#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

namespace abcprat {

/// Owning wrapper around mpfr_t. Binary operations run at the larger of the
/// operand precisions with round-to-nearest unless a rounding mode is given.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec), mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec), mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(mpz_class const& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), rnd);
    }
    Real(Real const& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)), mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real const& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    int sign() const { return mpfr_sgn(v_); }
    std::string to_string(int digits = 20) const;

#define ABCPRAT_REAL_BINOP(op, fn)                                                                                     \
    friend Real operator op(Real const& a, Real const& b) {                                                            \
        Real r(std::max(a.prec(), b.prec()));                                                                          \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                                                               \
        return r;                                                                                                      \
    }
    ABCPRAT_REAL_BINOP(+, mpfr_add)
    ABCPRAT_REAL_BINOP(-, mpfr_sub)
    ABCPRAT_REAL_BINOP(*, mpfr_mul)
    ABCPRAT_REAL_BINOP(/, mpfr_div)
#undef ABCPRAT_REAL_BINOP

    friend Real operator-(Real const& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(Real const& a, Real const& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(Real const& a, Real const& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(Real const& a, Real const& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(Real const& a, Real const& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

  private:
    mpfr_t v_;
};

Real abs(Real const& x);
Real sqrt(Real const& x);
Real log(Real const& x);
Real exp(Real const& x);
Real pow_ui(Real const& x, unsigned long e);
Real max(Real const& a, Real const& b);
Real min(Real const& a, Real const& b);
/// 2^e at the given precision (exact).
Real two_pow(long e, mpfr_prec_t prec);

struct Complex {
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(Complex const& a, Complex const& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(Complex const& a, Complex const& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(Complex const& a, Complex const& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(Complex const& a, Complex const& b) {
        Real den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
};

Real abs(Complex const& z);

} // namespace abcprat
