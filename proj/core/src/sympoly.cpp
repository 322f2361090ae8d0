#include "lltlab/sympoly.hpp"

#include <algorithm>
#include <functional>

#include "lltlab/errors.hpp"

namespace lltlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("Partition: parts must weakly decrease");
    }
}

Partition Partition::from_weight(std::vector<int> w) {
    std::sort(w.begin(), w.end(), std::greater<int>());
    while (!w.empty() && w.back() == 0) w.pop_back();
    for (int x : w)
        if (x < 0) throw Error("Partition: negative entry");
    Partition p;
    p.parts_ = std::move(w);
    return p;
}

int Partition::size() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

int Partition::part(int i) const {
    return i >= 0 && i < length() ? parts_[i] : 0;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool TermOrderLess::operator()(const Partition& a, const Partition& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
    }
    return false;
}

mpz_class monomial_orbit_size(const Partition& p, int n) {
    if (p.length() > n) return 0;
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    int zeros = n - p.length();
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), zeros);
    r /= f;
    int run = 1;
    for (int i = 1; i <= p.length(); ++i) {
        if (i < p.length() && p.part(i) == p.part(i - 1)) {
            ++run;
        } else {
            mpz_fac_ui(f.get_mpz_t(), run);
            r /= f;
            run = 1;
        }
    }
    return r;
}

SymPoly::SymPoly(int num_vars) : n_(num_vars) {
    if (num_vars < 0) throw Error("SymPoly: negative num_vars");
}

SymPoly SymPoly::one(int num_vars) {
    SymPoly p(num_vars);
    p.add_term(Partition(), QPoly(1));
    return p;
}

SymPoly SymPoly::monomial_basis(const Partition& lam, int num_vars, QPoly coeff) {
    if (lam.length() > num_vars)
        throw Error("SymPoly: partition longer than num_vars");
    SymPoly p(num_vars);
    p.add_term(lam, coeff);
    return p;
}

QPoly SymPoly::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? QPoly() : it->second;
}

void SymPoly::add_term(const Partition& lam, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (n_ != o.n_) throw VarMismatch("sp_add: num_vars mismatch");
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (n_ != o.n_) throw VarMismatch("sp_sub: num_vars mismatch");
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SymPoly SymPoly::operator*(const QPoly& c) const {
    SymPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [lam, a] : terms_) r.terms_.emplace(lam, a * c);
    return r;
}

namespace {

// All distinct rearrangements of lam zero-padded to n entries, ascending
// next_permutation order.
void for_each_orbit_vector(const Partition& lam, int n,
                           const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(n, 0);
    for (int i = 0; i < lam.length(); ++i) v[i] = lam.part(i);
    std::sort(v.begin(), v.end());
    do {
        fn(v);
    } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.num_vars() != b.num_vars()) throw VarMismatch("sp_mul: num_vars mismatch");
    const int n = a.num_vars();
    SymPoly out(n);
    for (const auto& [lam, ca] : a.terms()) {
        for (const auto& [mu, cb] : b.terms()) {
            // Enumerate the smaller orbit; fix the other key as its sorted
            // vector.  With orb(x) the orbit size of x in n variables,
            //   coeff of m_nu in m_lam*m_mu
            //     = #{beta in orbit(mu) : sort(lam+beta) = nu} * orb(lam)/orb(nu).
            const Partition* fixed = &lam;
            const Partition* looped = &mu;
            mpz_class orb_fixed = monomial_orbit_size(lam, n);
            mpz_class orb_looped = monomial_orbit_size(mu, n);
            if (orb_looped > orb_fixed) {
                std::swap(fixed, looped);
                std::swap(orb_fixed, orb_looped);
            }
            if (fixed->length() > n || looped->length() > n)
                throw Error("sp_mul: partition longer than num_vars");
            std::vector<int> base(n, 0);
            for (int i = 0; i < fixed->length(); ++i) base[i] = fixed->part(i);
            std::map<Partition, long, TermOrderLess> counts;
            for_each_orbit_vector(*looped, n, [&](const std::vector<int>& beta) {
                std::vector<int> sum(n);
                for (int i = 0; i < n; ++i) sum[i] = base[i] + beta[i];
                counts[Partition::from_weight(std::move(sum))] += 1;
            });
            QPoly cprod = ca * cb;
            for (const auto& [nu, cnt] : counts) {
                mpz_class num = mpz_class(cnt) * orb_fixed;
                mpz_class orb_nu = monomial_orbit_size(nu, n);
                mpz_class qt, rem;
                mpz_tdiv_qr(qt.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), orb_nu.get_mpz_t());
                if (rem != 0) throw InternalCheckFailed("sp_mul: orbit count not divisible");
                out.add_term(nu, cprod * QPoly(qt));
            }
        }
    }
    return out;
}

bool SymPoly::is_homogeneous(int* deg) const {
    int d = 0;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (first) {
            d = lam.size();
            first = false;
        } else if (lam.size() != d) {
            return false;
        }
    }
    if (deg) *deg = d;
    return true;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lam, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*m" + lam.to_string();
    }
    return s;
}

SymPoly sp_shift_q(const SymPoly& a) {
    SymPoly r(a.num_vars());
    for (const auto& [lam, c] : a.terms()) r.add_term(lam, shift_q(c));
    return r;
}

SymPoly sp_exact_div_qminus1_pow(const SymPoly& a, int k, const std::string& context) {
    SymPoly r(a.num_vars());
    for (const auto& [lam, c] : a.terms())
        r.add_term(lam, exact_div_qminus1_pow(c, k, context + " at m" + lam.to_string()));
    return r;
}

SymPoly sp_eval_q(const SymPoly& a, long v) {
    SymPoly r(a.num_vars());
    for (const auto& [lam, c] : a.terms()) r.add_term(lam, QPoly(c.eval(mpz_class(v))));
    return r;
}

bool equal_as_symfunc(const SymPoly& a, const SymPoly& b) {
    int nmin = std::min(a.num_vars(), b.num_vars());
    for (const auto& [lam, c] : a.terms())
        if (lam.length() > nmin) return false;
    for (const auto& [lam, c] : b.terms())
        if (lam.length() > nmin) return false;
    return a.terms() == b.terms();
}

SymPoly schur_poly(const Partition& lam, int num_vars) {
    if (lam.length() > num_vars)
        throw TooManyRows("schur_poly: partition " + lam.to_string() + " has more than " +
                          std::to_string(num_vars) + " rows");
    SymPoly out(num_vars);
    if (lam.length() == 0) return SymPoly::one(num_vars);

    // Row-by-row semistandard filling; rows weakly increase left to right,
    // columns strictly increase downward (English reading; equivalent count).
    int rows = lam.length();
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(lam.part(r), 0);
    std::vector<int> weight(num_vars + 1, 0);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            std::vector<int> w(weight.begin() + 1, weight.end());
            bool sorted = true;
            for (size_t i = 1; i < w.size(); ++i)
                if (w[i] > w[i - 1]) {
                    sorted = false;
                    break;
                }
            if (sorted) out.add_term(Partition::from_weight(w), QPoly(1));
            return;
        }
        int nr = c + 1 < lam.part(r) ? r : r + 1;
        int nc = c + 1 < lam.part(r) ? c + 1 : 0;
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0 && c < lam.part(r - 1)) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= num_vars; ++v) {
            t[r][c] = v;
            ++weight[v];
            rec(nr, nc);
            --weight[v];
        }
    };
    rec(0, 0);
    return out;
}

TermMap to_schur_basis(const SymPoly& a) {
    int deg = 0;
    if (!a.is_homogeneous(&deg)) throw NotHomogeneous("to_schur_basis: input not homogeneous");
    if (!a.is_zero() && deg > a.num_vars())
        throw DegreeExceedsVars("to_schur_basis: degree " + std::to_string(deg) +
                                " exceeds num_vars " + std::to_string(a.num_vars()));
    TermMap result;
    SymPoly rest = a;
    while (!rest.is_zero()) {
        const Partition lead = rest.terms().begin()->first;
        const QPoly c = rest.terms().begin()->second;
        result.emplace(lead, c);
        rest -= schur_poly(lead, a.num_vars()) * c;
        if (!rest.is_zero() && !TermOrderLess()(lead, rest.terms().begin()->first))
            throw InternalCheckFailed("to_schur_basis: peeling did not advance");
    }
    return result;
}

}  // namespace lltlab
