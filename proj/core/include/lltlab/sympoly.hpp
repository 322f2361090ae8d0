#pragma once

#include <map>
#include <string>

#include "lltlab/partition.hpp"
#include "lltlab/qpoly.hpp"

namespace lltlab {

using TermMap = std::map<Partition, QPoly, TermOrderLess>;

// Symmetric polynomial in x_1..x_n over Z[q], stored in the monomial basis:
// a map from exponent partitions (length <= n) to QPoly coefficients.
// Zero coefficients are never stored.
class SymPoly {
public:
    explicit SymPoly(int num_vars);
    static SymPoly zero(int num_vars) { return SymPoly(num_vars); }
    static SymPoly one(int num_vars);
    static SymPoly monomial_basis(const Partition& lam, int num_vars, QPoly coeff = QPoly(1));

    int num_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    QPoly coeff(const Partition& lam) const;

    void add_term(const Partition& lam, const QPoly& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);  // sp_mul
    SymPoly operator*(const QPoly& c) const;
    bool operator==(const SymPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    // True iff all stored exponent partitions share one total size; that size
    // goes to *deg (0 for the zero polynomial).
    bool is_homogeneous(int* deg = nullptr) const;

    std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

// q -> q+1 on every coefficient.
SymPoly sp_shift_q(const SymPoly& a);

// Per-coefficient exact division by (q-1)^k; NotDivisible mentions the term.
SymPoly sp_exact_div_qminus1_pow(const SymPoly& a, int k, const std::string& context);

// Per-coefficient evaluation at q = v (result has constant coefficients).
SymPoly sp_eval_q(const SymPoly& a, long v);

// Compares as abstract symmetric functions: identical term maps, ignoring
// num_vars, provided both store only partitions of length <= min(n_a, n_b).
bool equal_as_symfunc(const SymPoly& a, const SymPoly& b);

// Schur polynomial s_lam(x_1..x_n) expanded in the monomial basis via
// semistandard tableau enumeration.  Throws TooManyRows if length(lam) > n.
SymPoly schur_poly(const Partition& lam, int num_vars);

// Expands a homogeneous a of degree d <= num_vars in the Schur basis by
// leading-term peeling (the term order refines dominance, and Kostka
// unitriangularity makes the peel exact).  Throws NotHomogeneous or
// DegreeExceedsVars.
TermMap to_schur_basis(const SymPoly& a);

}  // namespace lltlab
