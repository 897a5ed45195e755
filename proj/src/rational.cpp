#include "dynzeta/rational.hpp"

#include <cctype>

namespace dynzeta {

namespace {

bool valid_decimal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_decimal(text))
            throw std::invalid_argument("Rational: malformed number '" + std::string(text) + "'");
        return Rational(Int(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!valid_decimal(num) || !valid_decimal(den))
        throw std::invalid_argument("Rational: malformed number '" + std::string(text) + "'");
    return Rational(Int(std::string(num)), Int(std::string(den)));
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

Int binomial(const Int& n, unsigned long k) {
    if (n >= 0) {
        Int r;
        mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
        return r;
    }
    // binomial(-n, k) = (-1)^k binomial(n + k - 1, k)
    Int top = -n + Int(k) - 1;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
    return (k % 2 == 0) ? r : Int(-r);
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace dynzeta
