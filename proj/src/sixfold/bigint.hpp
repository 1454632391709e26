#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sixfold {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Input / contract violations that should surface as structured errors
// (bad JSON, schema violations, precondition failures), never as aborts.
class ValueError : public std::runtime_error {
public:
    explicit ValueError(std::string message, std::string path = {})
        : std::runtime_error(path.empty() ? message : path + ": " + message),
          path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

class ParseError : public ValueError {
public:
    using ValueError::ValueError;
};

inline int sign(const BigInt& v) { return v.sign(); }

// cpp_int division truncates toward zero; these round toward -inf / +inf.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

// floor(sqrt(v)) for v >= 0
inline BigInt isqrt(const BigInt& v) {
    if (v < 0) throw ValueError("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

// Decimal-string parse with full validation (optional leading '-').
BigInt parse_bigint(const std::string& text);

inline std::string to_string(const BigInt& v) { return v.str(); }

// Largest magnitude that survives a round trip through a 64-bit float.
inline const BigInt kJsonSafeMax = (BigInt(1) << 53) - 1;

}  // namespace sixfold
