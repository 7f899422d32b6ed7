#include "glqv/common.hpp"

#include <cctype>
#include <cstdlib>

namespace glqv {

std::uint64_t enumeration_cap(std::uint64_t fallback)
{
    const char* env = std::getenv("GLQV_CAP");
    if (env == nullptr || *env == '\0')
        return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        return fallback;
    return v;
}

std::string to_string(const BigInt& x)
{
    return x.get_str();
}

std::string to_string(const BigRat& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

BigInt pow_ui(unsigned long base, unsigned long exponent)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

BigRat parse_fraction(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw DomainError("malformed fraction: '" + std::string(text) + "'");
    BigInt n(std::string(num[0] == '+' ? num.substr(1) : num));
    BigInt d(std::string(den[0] == '+' ? den.substr(1) : den));
    if (d == 0)
        throw DomainError("zero denominator in fraction: '" + std::string(text) + "'");
    BigRat r(n, d);
    r.canonicalize();
    return r;
}

std::size_t floor_log2(const BigInt& x)
{
    if (x <= 0)
        throw DomainError("floor_log2 of a non-positive number");
    return mpz_sizeinbase(x.get_mpz_t(), 2) - 1;
}

} // namespace glqv
