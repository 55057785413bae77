#pragma once

// Exact polynomials in q with arbitrary-precision integer coefficients and
// truncated power series in z over them, plus the closed product formulas
// for the Poincare-polynomial generating functions.

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

namespace hilbflag {

class QPoly {
public:
    QPoly() = default;
    QPoly(long constant);  // NOLINT: implicit by design, mirrors integer literals
    explicit QPoly(std::vector<mpz_class> coeffs);
    static QPoly monomial(int exponent, mpz_class c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
    mpz_class coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    mpz_class eval_one() const;  // value at q = 1
    bool nonnegative() const;
    std::string to_string() const;  // "1 + 3*q + 4*q^2"

private:
    void trim();
    std::vector<mpz_class> c_;  // little-endian by q-exponent
};

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) {
    return os << p.to_string();
}

// Power series in z truncated at a fixed order, coefficients in Z[q].
class ZSeries {
public:
    explicit ZSeries(int order);  // the zero series with exponents 0..order
    static ZSeries one(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const QPoly& coeff(int k) const { return c_[k]; }
    QPoly& coeff(int k) { return c_[k]; }

    ZSeries& operator+=(const ZSeries& o);
    ZSeries& operator-=(const ZSeries& o);
    ZSeries& operator*=(const ZSeries& o);  // truncated product
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
    friend ZSeries operator*(ZSeries a, const ZSeries& b) { return a *= b; }
    friend bool operator==(const ZSeries&, const ZSeries&) = default;

    ZSeries& scale(const QPoly& p);               // multiply every coefficient
    ZSeries& mul_geometric_inverse(int a, int b); // multiply by 1/(1 - z^a q^b)

private:
    std::vector<QPoly> c_;
};

// 1/(1 - z^a q^b) truncated; requires a >= 1, b >= 0.
ZSeries geometric_factor(int a, int b, int order);

enum class Family { goettsche, cheah, threeflag, pair13, tr };

// The five closed product formulas. The tr family uses the shifted index
// convention: its z^m coefficient is the polynomial of the level-(m+1)
// trivially-related space (see correspond).
ZSeries product_family(Family f, int order);

const char* family_name(Family f);

struct SeriesComparison {
    bool all_equal = true;
    int first_mismatch = -1;  // z-exponent of the first differing coefficient
};

// Compares series coefficients against an enumerated list (degree k vs list[k]).
SeriesComparison compare_series(const ZSeries& s, const std::vector<QPoly>& enumerated);

}  // namespace hilbflag
