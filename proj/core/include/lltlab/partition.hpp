#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace lltlab {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is allowed and denotes the constant monomial.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    // Sorts a nonnegative vector decreasingly and drops zeros.
    static Partition from_weight(std::vector<int> w);

    int size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const;                  // 0-based, zero-padded beyond length

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string to_string() const;          // "(3,2,1)", "()" for empty

private:
    std::vector<int> parts_;
};

// Canonical term order: ascending total size, then lexicographically
// descending parts, so within one degree (n) comes first and (1^n) last.
// This order refines dominance, which to_schur_basis relies on.
struct TermOrderLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// Number of distinct rearrangements of the partition padded with zeros to n
// entries, i.e. the multinomial n! / prod(multiplicities!).
mpz_class monomial_orbit_size(const Partition& p, int n);

}  // namespace lltlab
