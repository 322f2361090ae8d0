#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lltlab/sympoly.hpp"

namespace lltlab {

// Outcome of one verified identity.  On failure the witness holds both sides
// and their difference so the offending instance can be minimized offline.
struct VerificationReport {
    std::string claim;
    std::string params;
    bool holds = false;
    double millis = 0.0;
    std::vector<std::string> notes;

    struct Witness {
        SymPoly lhs;
        SymPoly rhs;
        SymPoly difference;
    };
    std::optional<Witness> witness;

    static VerificationReport pass(std::string claim, std::string params) {
        VerificationReport r;
        r.claim = std::move(claim);
        r.params = std::move(params);
        r.holds = true;
        return r;
    }
    static VerificationReport fail(std::string claim, std::string params, const SymPoly& lhs,
                                   const SymPoly& rhs) {
        VerificationReport r;
        r.claim = std::move(claim);
        r.params = std::move(params);
        r.holds = false;
        r.witness = Witness{lhs, rhs, lhs - rhs};
        return r;
    }
};

}  // namespace lltlab
