#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace okseed {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<int>;
using RatVector = std::vector<Rational>;

// Thrown when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The configuration is outside what the library supports (e.g. exceptional
// type with a non-natural order).
class UnsupportedConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed object failed one of its structural checks.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw InvalidArgument("zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

// Canonical "p/q" rendering, q > 0 and gcd-reduced; integers render as "p/1".
inline std::string to_pq(const Rational& q) {
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline Rational parse_pq(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InvalidArgument("malformed rational '" + text + "'");
    }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

inline RatVector to_rational(std::span<const int> v) {
    RatVector out;
    out.reserve(v.size());
    for (int x : v) out.emplace_back(x);
    return out;
}

template <class T, class U>
Rational dot(const std::vector<T>& a, const std::vector<U>& b) {
    if (a.size() != b.size()) throw InvalidArgument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
    return s;
}

inline long long dot_int(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("dot: dimension mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

}  // namespace okseed
