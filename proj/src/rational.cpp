#include "mzv/rational.hpp"

#include <cmath>

#include "mzv/error.hpp"

namespace mzvkit {

std::string to_pq_string(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    mpz_class num;
    mpz_class den = 1;
    auto parse_int = [&](const std::string &part, mpz_class &out) {
        if (part.empty() || out.set_str(part, 10) != 0) {
            throw DomainError("malformed rational: '" + s + "'");
        }
    };
    if (slash == std::string::npos) {
        parse_int(s, num);
    } else {
        parse_int(s.substr(0, slash), num);
        parse_int(s.substr(slash + 1), den);
    }
    if (den == 0) {
        throw DomainError("zero denominator: '" + s + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational inverse_power(std::uint64_t n, unsigned k)
{
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n), k);
    return Rational(mpz_class(1), d);
}

long double to_long_double(const Rational &q)
{
    // mpq_get_d is double-only; split through mpf for the extra bits.
    mpf_class f(q, 128);
    long exp = 0;
    double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    mpf_class rest = f;
    mpf_class m_part(mant, 128);
    if (exp >= 0) {
        mpf_mul_2exp(m_part.get_mpf_t(), m_part.get_mpf_t(), static_cast<mp_bitcnt_t>(exp));
    } else {
        mpf_div_2exp(m_part.get_mpf_t(), m_part.get_mpf_t(), static_cast<mp_bitcnt_t>(-exp));
    }
    rest -= m_part;
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp)) +
           static_cast<long double>(rest.get_d());
}

} // namespace mzvkit
