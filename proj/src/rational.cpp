#include "parhiggs/rational.hpp"

#include <regex>

#include "parhiggs/errors.hpp"

namespace parhiggs {

Int rat_floor(const Rat& x) {
    Int num = numerator(x);
    Int den = denominator(x); // canonical: den > 0
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

Int rat_strict_ceil(const Rat& x) {
    return rat_floor(x) + 1;
}

Rat parse_rational(const std::string& text) {
    static const std::regex form(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$)");
    std::smatch m;
    if (!std::regex_match(text, m, form))
        throw ValidationError("cannot parse '" + text +
                              "' as an exact rational (use integers or a/b; "
                              "decimal notation is not accepted)");
    Int num(m[1].str());
    Int den = m[2].matched ? Int(m[2].str()) : Int(1);
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    return Rat(num, den);
}

std::string rat_to_string(const Rat& x) {
    Int den = denominator(x);
    if (den == 1) return numerator(x).str();
    return numerator(x).str() + "/" + den.str();
}

Int binomial(long n, long k) {
    if (n < 0) throw ValidationError("binomial: negative row " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace parhiggs
