#include "leaky/rational.hpp"

#include <cctype>

namespace leaky {

std::string rational_to_string(const Rational& q)
{
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(std::string_view s)
{
    if (s.empty())
        return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (t.empty())
            return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s))
                return std::nullopt;
            return Rational(BigInt(std::string(s)));
        }
        std::string_view ns = s.substr(0, slash);
        std::string_view ds = s.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds))
            return std::nullopt;
        const BigInt num{std::string(ns)};
        const BigInt den{std::string(ds)};
        if (den == 0)
            return std::nullopt;
        return Rational(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

BigInt factorial(unsigned n)
{
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace leaky
