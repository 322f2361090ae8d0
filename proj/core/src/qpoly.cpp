#include "lltlab/qpoly.hpp"

#include <utility>

#include "lltlab/errors.hpp"

namespace lltlab {

QPoly::QPoly(mpz_class v) {
    if (v != 0) c_.push_back(std::move(v));
}

QPoly QPoly::from_coeffs(std::vector<mpz_class> c) {
    QPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

QPoly QPoly::monomial(mpz_class coeff, int power) {
    QPoly p;
    if (coeff != 0) {
        p.c_.assign(power + 1, mpz_class(0));
        p.c_[power] = std::move(coeff);
    }
    return p;
}

QPoly QPoly::qminus1() {
    return from_coeffs({mpz_class(-1), mpz_class(1)});
}

QPoly QPoly::qminus1_pow(int k) {
    return qminus1().pow(static_cast<unsigned>(k));
}

mpz_class QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly::from_coeffs(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

QPoly QPoly::pow(unsigned k) const {
    QPoly r(1);
    QPoly base = *this;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

mpz_class QPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& a = c_[i];
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (s.empty()) {
            if (a < 0) s += "-";
        } else {
            s += a < 0 ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (!unit || i == 0) s += mag.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += "q";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

QPoly shift_q(const QPoly& p) {
    // Horner in q+1.
    QPoly r;
    QPoly qp1 = QPoly::from_coeffs({mpz_class(1), mpz_class(1)});
    for (int i = p.degree(); i >= 0; --i) {
        r = r * qp1 + QPoly(p.coeff(i));
    }
    return r;
}

QPoly exact_div_qminus1_pow(const QPoly& p, int k, const std::string& context) {
    QPoly cur = p;
    for (int step = 0; step < k; ++step) {
        if (cur.is_zero()) continue;
        // cur = (q-1)*b + r with r = cur(1).
        const auto& c = cur.coeffs();
        int d = cur.degree();
        std::vector<mpz_class> b(d, mpz_class(0));
        mpz_class carry = 0;
        for (int i = d; i >= 1; --i) {
            carry += c[i];
            b[i - 1] = carry;
        }
        mpz_class r = c[0] + carry;
        if (r != 0) throw NotDivisible(context, step, r);
        cur = QPoly::from_coeffs(std::move(b));
    }
    return cur;
}

bool is_nonneg(const QPoly& p) {
    for (const auto& a : p.coeffs())
        if (a < 0) return false;
    return true;
}

}  // namespace lltlab
