#include "ginvlab/scalar.hpp"

#include <cctype>
#include <optional>

namespace ginvlab {

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::optional<int> take_sign() {
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            int s = text[pos] == '-' ? -1 : 1;
            ++pos;
            return s;
        }
        return std::nullopt;
    }

    mpz_class take_nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) {
            throw parse_error("expected digits at \"" + std::string(text.substr(start)) +
                              "\" in scalar \"" + std::string(text) + "\"");
        }
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    bool take_char(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct Term {
    mpq_class value;
    bool imaginary = false;
};

// term := sign? nat ('/' nat)? 'i'?
Term take_term(Scanner& sc, std::string_view whole) {
    int sign = sc.take_sign().value_or(1);
    mpz_class num = sc.take_nat();
    mpz_class den = 1;
    if (sc.take_char('/')) {
        den = sc.take_nat();
        if (sgn(den) == 0) {
            throw parse_error("zero denominator in scalar \"" + std::string(whole) + "\"");
        }
    }
    Term t;
    t.value = mpq_class(sign * num, den);
    t.value.canonicalize();
    t.imaginary = sc.take_char('i');
    return t;
}

std::string rat_str(const mpq_class& q) {
    return q.get_str();  // canonical "n" or "n/d"
}

}  // namespace

GQ GQ::from_fractions(const mpz_class& re_num, const mpz_class& re_den,
                      const mpz_class& im_num, const mpz_class& im_den) {
    if (sgn(re_den) == 0 || sgn(im_den) == 0) {
        throw parse_error("zero denominator in scalar construction");
    }
    mpq_class re(re_num, re_den);
    mpq_class im(im_num, im_den);
    re.canonicalize();
    im.canonicalize();
    return GQ(std::move(re), std::move(im));
}

GQ GQ::parse(std::string_view text) {
    Scanner sc{text};
    if (sc.done()) throw parse_error("empty scalar text");

    Term first = take_term(sc, text);
    if (sc.done()) {
        return first.imaginary ? GQ(mpq_class(0), first.value) : GQ(first.value, mpq_class(0));
    }

    // Only "real sign imag" remains.
    if (first.imaginary) {
        throw parse_error("unexpected trailing token \"" +
                          std::string(text.substr(sc.pos)) + "\" in scalar \"" +
                          std::string(text) + "\"");
    }
    if (sc.peek() != '+' && sc.peek() != '-') {
        throw parse_error("expected '+' or '-' at \"" + std::string(text.substr(sc.pos)) +
                          "\" in scalar \"" + std::string(text) + "\"");
    }
    Term second = take_term(sc, text);
    if (!second.imaginary) {
        throw parse_error("expected 'i' suffix on second term of scalar \"" +
                          std::string(text) + "\"");
    }
    if (!sc.done()) {
        throw parse_error("unexpected trailing token \"" + std::string(text.substr(sc.pos)) +
                          "\" in scalar \"" + std::string(text) + "\"");
    }
    return GQ(first.value, second.value);
}

std::string GQ::str() const {
    if (is_zero()) return "0";
    if (is_real()) return rat_str(re_);
    if (sgn(re_) == 0) return rat_str(im_) + "i";
    std::string out = rat_str(re_);
    if (sgn(im_) > 0) {
        out += "+" + rat_str(im_) + "i";
    } else {
        out += "-" + rat_str(mpq_class(-im_)) + "i";
    }
    return out;
}

GQ GQ::operator/(const GQ& o) const {
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    return GQ((re_ * o.re_ + im_ * o.im_) / norm, (im_ * o.re_ - re_ * o.im_) / norm);
}

}  // namespace ginvlab
