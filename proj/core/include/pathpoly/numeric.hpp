#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace pathpoly {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an always-canonical rational (reduced, positive denominator).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rat>;
using IVec = std::vector<Int>;

/** Parses "p", "-p" or "p/q". Throws error(errc::bad_parameters) otherwise. */
Rat parse_rational(const std::string& text);

/** Formats as "p" or "p/q" with the denominator omitted when it is 1. */
std::string format_rational(const Rat& value);

Int ivec_gcd(const IVec& v);

Rat dot(const QVec& a, const QVec& b);

bool is_zero(const QVec& v);
bool is_zero(const IVec& v);

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& v, const Rat& s);

QVec to_rational(const IVec& v);

/** Clears denominators and divides by the gcd; the direction is preserved
    (never multiplies by a negative factor). Zero maps to zero. */
IVec primitive(const QVec& v);

}  // namespace pathpoly
