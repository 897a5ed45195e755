#include "dynzeta/zeta_algebra.hpp"

#include <stdexcept>

namespace dynzeta {

IndexSequence IndexSequence::constant(const Rational& c, int length) {
    return IndexSequence(std::vector<Rational>(static_cast<size_t>(length), c));
}

IndexSequence IndexSequence::of_ints(const std::vector<long>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return IndexSequence(std::move(out));
}

void FactorExponents::set(int n, const Rational& e) {
    if (n < 1) throw std::invalid_argument("factor index must be >= 1");
    if (e.is_zero())
        exponents.erase(n);
    else
        exponents[n] = e;
    if (n > max_index) max_index = n;
}

Rational FactorExponents::get(int n) const {
    auto it = exponents.find(n);
    return it == exponents.end() ? Rational() : it->second;
}

MonicSeries exp_series(const TruncatedSeries& x) {
    if (!x.coeff(0).is_zero())
        throw std::invalid_argument("exp_series: constant term must be zero");
    int n = x.order();
    TruncatedSeries sum = TruncatedSeries::one(n);
    TruncatedSeries term = TruncatedSeries::one(n);
    // x has valuation >= 1, so x^k vanishes beyond k = n.
    for (int k = 1; k <= n; ++k) {
        term = scale(Rational(Int(1), Int(k)), mul(term, x));
        sum = add(sum, term);
    }
    return MonicSeries(std::move(sum));
}

TruncatedSeries log_series(const MonicSeries& z) {
    int n = z.order();
    // z = 1 - x with x of valuation >= 1.
    TruncatedSeries x = sub(TruncatedSeries::one(n), z.series());
    TruncatedSeries sum(n);
    TruncatedSeries power = TruncatedSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        power = mul(power, x);
        sum = sub(sum, scale(Rational(Int(1), Int(k)), power));
    }
    return sum;
}

MonicSeries pow_rational(const MonicSeries& z, const Rational& y) {
    if (y.is_zero()) return MonicSeries::one(z.order());
    return exp_series(scale(y, log_series(z)));
}

FactorExponents factorize(const MonicSeries& z) {
    int n = z.order();
    FactorExponents f;
    f.max_index = n;
    TruncatedSeries w = z.series();
    for (int m = 1; m <= n; ++m) {
        const Rational a = w.coeff(m);
        if (a.is_zero()) continue;
        // w = (1-t^m)^(-a) * (1 + O(t^(m+1))), so the exponent of (1-t^m) is -a.
        f.set(m, -a);
        w = mul(w, binomial_factor(m, a, n).series());
    }
    return f;
}

MonicSeries expand_factors(const FactorExponents& f, int order) {
    MonicSeries r = MonicSeries::one(order);
    for (const auto& [n, e] : f.exponents) {
        if (n > order) continue;  // (1 - t^n) is 1 modulo t^(order+1)
        r = mul(r, binomial_factor(n, e, order));
    }
    return r;
}

IntegralityReport integrality(const std::vector<Rational>& values) {
    for (size_t k = 0; k < values.size(); ++k) {
        if (!values[k].is_integer())
            return {false, static_cast<int>(k) + 1, values[k]};
    }
    return {};
}

IntegralityReport is_integral(const MonicSeries& z) {
    for (int k = 0; k <= z.order(); ++k) {
        if (!z.coeff(k).is_integer()) return {false, k, z.coeff(k)};
    }
    return {};
}

MonicSeries zeta_from_indices(const IndexSequence& i) {
    int n = i.length();
    TruncatedSeries x(n);
    for (int k = 1; k <= n; ++k) x.set_coeff(k, i.at(k) / Rational(k));
    return exp_series(x);
}

IndexSequence indices_from_zeta(const MonicSeries& z) {
    TruncatedSeries lg = log_series(z);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(z.order()));
    for (int k = 1; k <= z.order(); ++k) out.push_back(Rational(k) * lg.coeff(k));
    return IndexSequence(std::move(out));
}

}  // namespace dynzeta
