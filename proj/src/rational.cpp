#include "liewb/rational.hpp"

namespace liewb {

Rational rat_parse(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    std::string s = text;
    if (s[0] == '+')
        s = s.substr(1);
    if (s.empty() || s == "-" || s == "/")
        throw ParseError("bad rational literal: '" + text + "'");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok)
            throw ParseError("bad rational literal: '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) {
    return q.get_str();
}

Rational rat_binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

Rational rat_factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

} // namespace liewb
