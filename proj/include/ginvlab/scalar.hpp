#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ginvlab {

/// Raised when scalar or matrix text does not match the expected grammar.
/// The message names the offending token.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact Gaussian rational: re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept canonical at all times (lowest terms, strictly positive
/// denominator, zero stored as 0/1), so operator== is plain structural equality
/// and serialization is unique per value.
///
/// Text grammar (whitespace around tokens ignored):
///   scalar := real | imag | real sign imag
///   real   := sign? nat ('/' nat)?
///   imag   := sign? nat ('/' nat)? 'i'
///   sign   := '+' | '-'
class GQ {
public:
    GQ() : re_(0), im_(0) {}
    GQ(long v) : re_(v), im_(0) {}                     // NOLINT: implicit by design
    GQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        canonical(re_);
        canonical(im_);
    }

    /// Builds re_num/re_den + (im_num/im_den)i, reducing to canonical form.
    static GQ from_fractions(const mpz_class& re_num, const mpz_class& re_den,
                             const mpz_class& im_num, const mpz_class& im_den);

    /// Parses the scalar grammar. Throws parse_error naming the offending token.
    static GQ parse(std::string_view text);

    /// Canonical serialization: reduced fractions, "/1" omitted, real part
    /// first, '+'/'-' separator, 'i' suffix; pure-real and pure-imaginary
    /// values emit a single term; zero emits "0".
    std::string str() const;

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GQ conj() const { return GQ(re_, -im_); }

    GQ operator-() const { return GQ(-re_, -im_); }
    GQ operator+(const GQ& o) const { return GQ(re_ + o.re_, im_ + o.im_); }
    GQ operator-(const GQ& o) const { return GQ(re_ - o.re_, im_ - o.im_); }
    GQ operator*(const GQ& o) const {
        return GQ(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    /// Exact division; throws std::domain_error on a zero divisor.
    GQ operator/(const GQ& o) const;

    GQ& operator+=(const GQ& o) { return *this = *this + o; }
    GQ& operator-=(const GQ& o) { return *this = *this - o; }
    GQ& operator*=(const GQ& o) { return *this = *this * o; }
    GQ& operator/=(const GQ& o) { return *this = *this / o; }

    bool operator==(const GQ& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GQ& o) const { return !(*this == o); }

private:
    // mpq arithmetic preserves canonical form; only raw construction needs it.
    static void canonical(mpq_class& q) { q.canonicalize(); }

    mpq_class re_;
    mpq_class im_;
};

inline GQ conj(const GQ& z) { return z.conj(); }

}  // namespace ginvlab
