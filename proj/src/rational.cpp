#include "jacklab/rational.hpp"

#include <stdexcept>

namespace jacklab {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_text(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    std::string body(s[0] == '+' ? s.substr(1) : s);
    return Integer(body);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole = "0";
        Integer w = parse_integer(whole);
        Integer f = frac.empty() ? Integer(0) : parse_integer(frac);
        if (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))
            throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rational q(abs(w) * scale + f, scale);
        q.canonicalize();
        if (negative || w < 0) q = -q;
        return q;
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    result.canonicalize();
    return result;
}

Rational factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace jacklab
