#include "singlab/numeric.hpp"

#include <cctype>

namespace singlab {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty rational literal");
    auto slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw InvalidInput("bad rational literal '" + text + "'");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw InvalidInput("bad rational literal '" + text + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw InvalidInput("bad rational literal '" + text + "'");
    };
    try {
        if (slash == std::string::npos) {
            check_int(text);
            return Rational(BigInt(text));
        }
        std::string p = text.substr(0, slash);
        std::string q = text.substr(slash + 1);
        check_int(p);
        check_int(q);
        BigInt den(q);
        if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
        return Rational(BigInt(p), den);
    } catch (const std::exception& e) {
        throw InvalidInput("bad rational literal '" + text + "': " + e.what());
    }
}

std::string rational_to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string bigint_to_string(const BigInt& v) { return v.str(); }

}  // namespace singlab
