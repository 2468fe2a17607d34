#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsize {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an operation would exceed the configured enumeration cap
// (or another hard resource bound). Callers are expected to retry with a
// closed form or a smaller request.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation's stated precondition is violated.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Global cap on the number of elements any single enumeration may scan.
// Default 2^24; the CLI overrides it from NSIZE_MAX_ENUM.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

// 2^e for a nonnegative exponent.
BigInt pow2(const BigInt& e);

// 2^(2^k), the threshold ladder used by the super-exponential block set.
BigInt pow2_tower(unsigned k);

BigInt ipow(const BigInt& base, unsigned exp);

// Largest r >= 0 with r^p <= x (x >= 0, p >= 1). Exact.
BigInt iroot(const BigInt& x, unsigned p);

// Number of binary digits of n >= 1 (bit_length(1) = 1).
unsigned bit_length(const BigInt& n);

// Leading digit of n >= 1 in base 10.
int leading_decimal_digit(const BigInt& n);

bool is_prime_u64(std::uint64_t n);
// Deterministic primality; consults the shared sieve when it already covers
// n, otherwise trial division below 2^32 and Miller-Rabin with a proven base
// set up to 2^64. resource_error beyond 2^64.
bool is_prime(const BigInt& n);

// Shared prime sieve (internally synchronized). Enumeration-heavy callers
// extend it once so per-element membership is a table lookup.
void ensure_prime_sieve(std::uint64_t limit);
// Exact count of primes <= n, sieving as needed.
std::uint64_t sieved_prime_count(std::uint64_t n);

std::string to_string(const BigInt& n);

// "p/q" in lowest terms, or just "p" when q == 1.
std::string to_string(const Rational& q);

// Exact decimal rendering with up to `digits` significant digits
// (round half up); trailing zeros trimmed. Terminating decimals shorter
// than the budget print exactly.
std::string decimal_string(const Rational& value, unsigned digits = 12);

Rational make_rational(const BigInt& num, const BigInt& den);

}  // namespace nsize
