#include "snclab/rational.hpp"
#include "snclab/errors.hpp"

#include <sstream>

namespace snclab {

std::string to_string(const Rational & r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {
    bool all_digits(std::string_view s)
    {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    }
}

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (! s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (! all_digits(num))
        throw ParseError("", "not a rational: '" + std::string(text) + "'");

    Integer p{std::string(num)};
    Integer q{1};
    if (slash != std::string_view::npos) {
        std::string_view den = s.substr(slash + 1);
        if (! all_digits(den))
            throw ParseError("", "not a rational: '" + std::string(text) + "'");
        q = Integer{std::string(den)};
        if (q == 0)
            throw ParseError("", "zero denominator: '" + std::string(text) + "'");
    }

    Rational r(p, q);
    return negative ? Rational(-r) : r;
}

bool is_integer(const Rational & r)
{
    return boost::multiprecision::denominator(r) == 1;
}

long long to_small_integer(const Rational & r)
{
    if (! is_integer(r))
        throw PreconditionError("not an integer: " + to_string(r));
    return boost::multiprecision::numerator(r).convert_to<long long>();
}

} // namespace snclab
