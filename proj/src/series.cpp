#include "dynzeta/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynzeta {

namespace {

int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return order;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order)
    : coeffs_(static_cast<size_t>(check_order(order)) + 1) {}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(check_order(order)) + 1)
        throw std::invalid_argument("series coefficient count must equal order + 1");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int k, int order) {
    TruncatedSeries s(order);
    s.set_coeff(k, c);
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    check_order(new_order);
    if (new_order > order())
        throw std::invalid_argument("cannot truncate a series to a higher order");
    return TruncatedSeries(new_order,
                           std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

std::string TruncatedSeries::str() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        if (out.empty()) {
            out += c.str();
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += abs(c).str();
        }
        if (k > 0) out += "*t^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(order() + 1) + ")";
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
}

bool identical(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order() == b.order() && a == b;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

TruncatedSeries negate(const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, -a.coeff(k));
    return r;
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, c * a.coeff(k));
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

MonicSeries::MonicSeries(TruncatedSeries s) : series_(std::move(s)) {
    if (!(series_.coeff(0) == Rational(1)))
        throw std::invalid_argument("series is not monic (constant term must be 1)");
}

MonicSeries mul(const MonicSeries& a, const MonicSeries& b) {
    return MonicSeries(mul(a.series(), b.series()));
}

MonicSeries inverse(const MonicSeries& a) {
    int n = a.order();
    TruncatedSeries b = TruncatedSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int i = 1; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
        b.set_coeff(k, -acc);
    }
    return MonicSeries(std::move(b));
}

MonicSeries substitute_tk(const MonicSeries& z, int k, int target_order) {
    if (k < 1) throw std::invalid_argument("substitution power k must be >= 1");
    check_order(target_order);
    if (static_cast<long long>(target_order) > static_cast<long long>(k) * z.order())
        throw std::invalid_argument(
            "substitute_tk: target order exceeds k * source order (insufficient source precision)");
    TruncatedSeries r(target_order);
    for (int j = 0; j * static_cast<long long>(k) <= target_order; ++j)
        r.set_coeff(j * k, z.coeff(j));
    return MonicSeries(std::move(r));
}

MonicSeries binomial_factor(int n, long e, int order) {
    if (n < 1) throw std::invalid_argument("binomial_factor: n must be >= 1");
    check_order(order);
    if (e < 0) return inverse(binomial_factor(n, -e, order));
    TruncatedSeries r(order);
    // (1 - t^n)^e = sum_j (-1)^j C(e, j) t^(n j)
    for (long j = 0; j <= e && j * static_cast<long long>(n) <= order; ++j) {
        Int c = binomial(Int(e), static_cast<unsigned long>(j));
        r.set_coeff(static_cast<int>(j * n), Rational(j % 2 == 0 ? c : Int(-c)));
    }
    return MonicSeries(std::move(r));
}

MonicSeries binomial_factor(int n, const Rational& e, int order) {
    if (n < 1) throw std::invalid_argument("binomial_factor: n must be >= 1");
    check_order(order);
    TruncatedSeries r(order);
    Rational c(1);  // C(e, j), updated incrementally
    r.set_coeff(0, c);
    for (int j = 1; static_cast<long long>(j) * n <= order; ++j) {
        c = c * (e - Rational(j - 1)) / Rational(j);
        if (c.is_zero()) break;
        r.set_coeff(j * n, j % 2 == 0 ? c : -c);
    }
    return MonicSeries(std::move(r));
}

}  // namespace dynzeta
