#pragma once

#include "dhb/construct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dhb {

// Jordan-type generation certificate for <x, y> = A_n.
struct JordanCertificate {
    std::size_t n = 0;
    unsigned p = 0;
    bool transitive = false;
    std::optional<std::vector<point>> cycle;  // the w-cycle of length p
    point x_witness = 0, y_witness = 0;
    CycleType w_type;
    std::vector<std::string> failures;  // one entry per failed hypothesis
    bool ok() const { return failures.empty(); }
};

JordanCertificate jordan_certify(const HurwitzMap& m, unsigned p);
// Re-derives every field from the raw permutations; true iff it agrees with cert.
bool reverify(const HurwitzMap& m, const JordanCertificate& cert);

struct PositionEvidence {
    std::string position;  // "x", "y", "z"
    CycleType type1, type2;
    std::string method;    // "cycle type" or "alternating-group conjugacy"
    bool ok = false;
};

struct BeauvilleEvidence {
    std::vector<PositionEvidence> positions;
    FixedPointVector v1, v2;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Both triples must have exact type (2,3,7). Powers of one generator all share a
// cycle type, so equal types are settled by explicit A_n conjugacy of powers.
BeauvilleEvidence beauville_check(const HurwitzMap& m1, const HurwitzMap& m2);

struct DHBCertificate {
    Plan plan;
    MapPair pair;
    JordanCertificate jordan1, jordan2;
    BeauvilleEvidence beauville;
    FixedPointVector v_difference;
    bool ok() const { return jordan1.ok() && jordan2.ok() && beauville.ok(); }
};

DHBCertificate certify_dhb(const Plan& plan, const JoinObserver* obs = nullptr);

struct SearchBounds {
    long g_max = 3, alpha_max = 16, beta_max = 12, gamma_max = 14;
};

struct SignatureTuple {
    long g, alpha, beta, gamma;
    friend bool operator==(const SignatureTuple&, const SignatureTuple&) = default;
};

struct MinDegreeResult {
    long n = 0;
    std::vector<std::pair<SignatureTuple, SignatureTuple>> witnesses;
};

// Least n with two signatures 84(g-1) + 21a + 28b + 36c = n whose differences
// (da/4, db/3, dc/7) are all non-zero integers. Throws if the bounds admit none.
MinDegreeResult min_degree_search(const SearchBounds& bounds = {});

struct CoverCertificate {
    DHBCertificate base;      // the unadjusted pair
    std::string branch;       // "E+2A" or "internal join"
    std::size_t extra_g = 0;  // G copies added to the stock
    std::size_t degree = 0;
    MapPair pair;             // adjusted pair
    long tau1 = 0, tau2 = 0;  // transposition counts of x in the adjusted maps
    JordanCertificate jordan1, jordan2;
    BeauvilleEvidence beauville;
    FixedPointVector v_difference;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Adjusts a main-route pair so that both involutions lift to the double cover
// (transposition count divisible by 4), keeping the A_n-level evidence intact.
CoverCertificate certify_cover(const Plan& plan, const JoinObserver* obs = nullptr);

// Transposition count of x, halved: bookkeeping quantity for lifting.
long half_tau(const HurwitzMap& m);

}  // namespace dhb
