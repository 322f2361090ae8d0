#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace lltlab {

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients.  Canonical form: coefficient vector has no trailing zeros, so
// the zero polynomial is the empty vector and degree() is -1 for it.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(long v) { *this = QPoly(mpz_class(v)); }
    explicit QPoly(mpz_class v);

    // Canonicalizes (strips trailing zeros).  c[i] is the coefficient of q^i.
    static QPoly from_coeffs(std::vector<mpz_class> c);
    static QPoly monomial(mpz_class coeff, int power);
    static QPoly q() { return monomial(1, 1); }
    static QPoly qminus1();
    // (q-1)^k
    static QPoly qminus1_pow(int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int i) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly pow(unsigned k) const;
    mpz_class eval(const mpz_class& x) const;
    // Human-readable form like "q^2 + 2*q - 1"; "0" for zero.
    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Substitutes q -> q+1.
QPoly shift_q(const QPoly& p);

// Divides by (q-1)^k, insisting the division is exact at every one of the k
// synthetic-division rounds; throws NotDivisible otherwise.
QPoly exact_div_qminus1_pow(const QPoly& p, int k, const std::string& context = "exact_div");

bool is_nonneg(const QPoly& p);

}  // namespace lltlab
