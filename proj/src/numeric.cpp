#include "nsize/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <vector>

namespace nsize {

namespace {
std::atomic<std::uint64_t> g_enum_cap{std::uint64_t{1} << 24};
}

std::uint64_t enumeration_cap() { return g_enum_cap.load(); }

void set_enumeration_cap(std::uint64_t cap) { g_enum_cap.store(cap); }

BigInt pow2(const BigInt& e) {
    if (e < 0) throw precondition_error("pow2: negative exponent");
    if (e > 1'000'000) throw resource_error("pow2: exponent too large");
    return BigInt(1) << static_cast<unsigned>(e);
}

BigInt pow2_tower(unsigned k) {
    if (k > 20) throw resource_error("pow2_tower: 2^(2^k) too large");
    return BigInt(1) << (1u << k);
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return result;
}

BigInt iroot(const BigInt& x, unsigned p) {
    if (x < 0) throw precondition_error("iroot: negative radicand");
    if (p == 0) throw precondition_error("iroot: zero index");
    if (x == 0 || x == 1 || p == 1) return x;
    // Newton iteration from an over-estimate; converges downward.
    unsigned bits = bit_length(x);
    BigInt r = BigInt(1) << (bits / p + 1);
    while (true) {
        // next = ((p-1)*r + x / r^(p-1)) / p
        BigInt rp1 = ipow(r, p - 1);
        BigInt next = ((p - 1) * r + x / rp1) / p;
        if (next >= r) break;
        r = next;
    }
    while (ipow(r, p) > x) --r;
    while (ipow(r + 1, p) <= x) ++r;
    return r;
}

unsigned bit_length(const BigInt& n) {
    if (n < 1) throw precondition_error("bit_length: n must be >= 1");
    return static_cast<unsigned>(boost::multiprecision::msb(n)) + 1u;
}

int leading_decimal_digit(const BigInt& n) {
    if (n < 1) throw precondition_error("leading_decimal_digit: n must be >= 1");
    BigInt m = n;
    while (m >= 10) m /= 10;
    return static_cast<int>(m);
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1u) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1u;
    }
    return r;
}

bool miller_rabin_u64(std::uint64_t n) {
    // Proven deterministic for all n < 2^64 with these bases.
    static constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (std::uint64_t a : bases) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool trial_division(std::uint64_t n) {
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

// Shared sieve with per-block cumulative counts.
std::mutex g_sieve_mutex;
std::vector<bool> g_sieve;              // g_sieve[i]: i is prime
std::vector<std::uint32_t> g_block_pi;  // primes below the end of each block
constexpr std::size_t kSieveBlock = 1u << 12;

void ensure_sieve_locked(std::size_t limit) {
    if (g_sieve.size() > limit) return;
    const std::size_t n = std::max<std::size_t>(limit + 1, 1u << 10);
    std::vector<bool> sieve(n, true);
    sieve[0] = false;
    if (n > 1) sieve[1] = false;
    for (std::size_t p = 2; p * p < n; ++p) {
        if (!sieve[p]) continue;
        for (std::size_t q = p * p; q < n; q += p) sieve[q] = false;
    }
    std::vector<std::uint32_t> blocks;
    std::uint32_t running = 0;
    for (std::size_t b = 0; b * kSieveBlock < n; ++b) {
        const std::size_t end = std::min(n, (b + 1) * kSieveBlock);
        for (std::size_t i = b * kSieveBlock; i < end; ++i) running += sieve[i];
        blocks.push_back(running);
    }
    g_sieve = std::move(sieve);
    g_block_pi = std::move(blocks);
}

}  // namespace

void ensure_prime_sieve(std::uint64_t limit) {
    std::lock_guard<std::mutex> lock(g_sieve_mutex);
    ensure_sieve_locked(static_cast<std::size_t>(limit));
}

std::uint64_t sieved_prime_count(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(g_sieve_mutex);
    ensure_sieve_locked(static_cast<std::size_t>(n));
    const std::size_t limit = static_cast<std::size_t>(n);
    const std::size_t block = limit / kSieveBlock;
    std::uint64_t count = block > 0 ? g_block_pi[block - 1] : 0;
    for (std::size_t i = block * kSieveBlock; i <= limit; ++i) count += g_sieve[i];
    return count;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    {
        std::lock_guard<std::mutex> lock(g_sieve_mutex);
        if (n < g_sieve.size()) return g_sieve[static_cast<std::size_t>(n)];
    }
    if (n < (std::uint64_t{1} << 32)) return trial_division(n);
    if ((n & 1u) == 0) return false;
    return miller_rabin_u64(n);
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n > std::numeric_limits<std::uint64_t>::max())
        throw resource_error("is_prime: candidate above 2^64");
    return is_prime_u64(static_cast<std::uint64_t>(n));
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string decimal_string(const Rational& value, unsigned digits) {
    if (digits == 0) throw precondition_error("decimal_string: zero digits");
    if (value == 0) return "0";
    const bool negative = value < 0;
    BigInt num = boost::multiprecision::numerator(value);
    if (negative) num = -num;
    const BigInt den = boost::multiprecision::denominator(value);

    // Decimal exponent e with 10^e <= num/den < 10^(e+1).
    long long e = 0;
    BigInt lo = num, hi = den;  // comparing num/den against powers of ten
    while (lo >= 10 * hi) {
        hi *= 10;
        ++e;
    }
    while (lo < hi) {
        lo *= 10;
        --e;
    }

    // Significand rounded half up to `digits` digits.
    long long shift = static_cast<long long>(digits) - 1 - e;
    BigInt scaled_num = num, scaled_den = den;
    if (shift >= 0)
        scaled_num *= ipow(10, static_cast<unsigned>(shift));
    else
        scaled_den *= ipow(10, static_cast<unsigned>(-shift));
    BigInt mant = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    std::string m = mant.str();
    if (m.size() > digits) {  // rounding carried into a new leading digit
        ++e;
        m.pop_back();
    }
    while (m.size() > 1 && m.back() == '0') m.pop_back();

    std::string out;
    if (e >= 0) {
        if (static_cast<long long>(m.size()) <= e) {
            m.append(static_cast<std::size_t>(e + 1) - m.size(), '0');
            out = m;
        } else {
            out = m.substr(0, static_cast<std::size_t>(e + 1));
            std::string frac = m.substr(static_cast<std::size_t>(e + 1));
            if (!frac.empty()) out += "." + frac;
        }
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + m;
    }
    return negative ? "-" + out : out;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw precondition_error("make_rational: zero denominator");
    return Rational(num, den);
}

}  // namespace nsize
