#include "hilbflag/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbflag {

QPoly::QPoly(long constant) {
    if (constant != 0) c_.push_back(mpz_class(constant));
}

QPoly::QPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int exponent, mpz_class c) {
    if (exponent < 0) throw std::invalid_argument("negative q-exponent");
    QPoly p;
    if (c != 0) {
        p.c_.assign(exponent + 1, mpz_class(0));
        p.c_[exponent] = std::move(c);
    }
    return p;
}

mpz_class QPoly::coeff(int k) const {
    return (k >= 0 && k <= degree()) ? c_[k] : mpz_class(0);
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<mpz_class> prod(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    c_ = std::move(prod);
    trim();
    return *this;
}

mpz_class QPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

bool QPoly::nonnegative() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        if (c_[k] == 0) continue;
        mpz_class a = abs(c_[k]);
        if (s.empty())
            s += (c_[k] < 0) ? "-" : "";
        else
            s += (c_[k] < 0) ? " - " : " + ";
        if (k == 0) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += (k == 1) ? "q" : "q^" + std::to_string(k);
        }
    }
    return s;
}

ZSeries::ZSeries(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    c_.assign(order + 1, QPoly());
}

ZSeries ZSeries::one(int order) {
    ZSeries s(order);
    s.c_[0] = QPoly(1);
    return s;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
}

ZSeries& ZSeries::operator*=(const ZSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    std::vector<QPoly> prod(order() + 1);
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(prod);
    return *this;
}

ZSeries& ZSeries::scale(const QPoly& p) {
    for (auto& q : c_) q *= p;
    return *this;
}

ZSeries& ZSeries::mul_geometric_inverse(int a, int b) {
    if (a < 1 || b < 0) throw std::invalid_argument("bad geometric factor");
    QPoly qb = QPoly::monomial(b);
    // Forward accumulation: coeff[i] picks up coeff[i-a]*q^b, which already
    // contains all lower geometric terms.
    for (int i = a; i <= order(); ++i) c_[i] += c_[i - a] * qb;
    return *this;
}

ZSeries geometric_factor(int a, int b, int order) {
    return ZSeries::one(order).mul_geometric_inverse(a, b);
}

ZSeries product_family(Family f, int order) {
    ZSeries s = ZSeries::one(order);
    // Euler-type product over all column heights that fit under the truncation.
    auto goettsche_part = [&]() {
        for (int k = 1; k <= order; ++k) s.mul_geometric_inverse(k, k - 1);
    };
    switch (f) {
        case Family::goettsche:
            goettsche_part();
            break;
        case Family::cheah:
            goettsche_part();
            s.mul_geometric_inverse(1, 1);
            break;
        case Family::threeflag:
            goettsche_part();
            s.mul_geometric_inverse(1, 1);
            s.mul_geometric_inverse(2, 2);
            s.scale(QPoly(std::vector<mpz_class>{1, 1}));  // (1 + q)
            break;
        case Family::pair13: {
            goettsche_part();
            s.mul_geometric_inverse(1, 1);
            s.mul_geometric_inverse(2, 2);
            ZSeries numerator(order);  // 1 + q - q z
            numerator.coeff(0) = QPoly(std::vector<mpz_class>{1, 1});
            if (order >= 1) numerator.coeff(1) = QPoly(std::vector<mpz_class>{0, -1});
            s *= numerator;
            break;
        }
        case Family::tr:
            goettsche_part();
            s.mul_geometric_inverse(1, 1);
            s.mul_geometric_inverse(2, 2);
            break;
    }
    return s;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::goettsche: return "goettsche";
        case Family::cheah: return "cheah";
        case Family::threeflag: return "threeflag";
        case Family::pair13: return "pair13";
        case Family::tr: return "tr";
    }
    return "?";
}

SeriesComparison compare_series(const ZSeries& s, const std::vector<QPoly>& enumerated) {
    SeriesComparison r;
    int upto = std::min<int>(s.order(), static_cast<int>(enumerated.size()) - 1);
    for (int k = 0; k <= upto; ++k) {
        if (s.coeff(k) == enumerated[k]) continue;
        r.all_equal = false;
        r.first_mismatch = k;
        break;
    }
    return r;
}

}  // namespace hilbflag
