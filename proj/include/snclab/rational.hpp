#ifndef SNCLAB_RATIONAL_HPP
#define SNCLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace snclab {

// Every quantity a verdict depends on is an exact rational. There is no
// floating point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational & r);

/// Accepts "p" and "p/q" with optional leading '-'. Throws ParseError on
/// anything else (including decimal notation) or a zero denominator.
Rational parse_rational(std::string_view text);

/// True iff r is an integer (denominator 1 after normalisation).
bool is_integer(const Rational & r);

/// Exact conversion for rationals known to be small integers.
long long to_small_integer(const Rational & r);

} // namespace snclab

#endif
