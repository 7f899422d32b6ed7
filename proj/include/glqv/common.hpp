#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace glqv {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Input outside an operation's domain (bad prime power, j not coprime to M, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration cap, factorization budget or memory cap was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed (non-exact division etc.).
// Seeing one of these means a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr int kDefaultPartitionCap = 60;
inline constexpr std::uint64_t kDefaultNuMapCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultPolyScanCap = std::uint64_t{1} << 24;

// Cap override from the GLQV_CAP environment variable, or `fallback`.
std::uint64_t enumeration_cap(std::uint64_t fallback);

std::string to_string(const BigInt& x);
// "a/b", or "a" when the denominator is 1.
std::string to_string(const BigRat& x);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow_ui(unsigned long base, unsigned long exponent);
BigInt gcd(const BigInt& a, const BigInt& b);

// Parses "a/b" or "a" into a canonical rational. Throws DomainError.
BigRat parse_fraction(std::string_view text);

// Floor of the bit length minus one, i.e. k with 2^k <= x < 2^(k+1). Requires x > 0.
std::size_t floor_log2(const BigInt& x);

} // namespace glqv
