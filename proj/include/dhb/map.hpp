#pragma once

#include "dhb/perm.hpp"

#include <set>
#include <string>
#include <vector>

namespace dhb {

struct FixedPointVector {
    long alpha = 0, beta = 0, gamma = 0;  // |Fix x|, |Fix y|, |Fix z|
    friend bool operator==(const FixedPointVector&, const FixedPointVector&) = default;
};

FixedPointVector operator+(FixedPointVector u, const FixedPointVector& v);
FixedPointVector operator-(FixedPointVector u, const FixedPointVector& v);
std::string to_string(const FixedPointVector& v);

struct Signature {
    long genus = 0;
    FixedPointVector v;
};

// Pair of x-fixed points with b = a (xy)^k. The orientation a -> b is kept.
// Joins need t_symmetric (b = a t): only then does the reflection survive.
struct Handle {
    int k = 1;
    point a = 0, b = 0;
    bool t_symmetric = false;
    friend bool operator==(const Handle&, const Handle&) = default;
};

// A transitive (2,3,7) permutation triple x, y together with a reflection t.
class HurwitzMap {
public:
    // Checks x^2 = y^3 = (xy)^7 = t^2 = (xt)^2 = (yt)^2 = 1 and transitivity of <x, y>.
    HurwitzMap(Perm x, Perm y, Perm t);

    std::size_t degree() const { return x_.degree(); }
    const Perm& x() const { return x_; }
    const Perm& y() const { return y_; }
    const Perm& t() const { return t_; }
    Perm z() const { return inverse(compose(x_, y_)); }
    Perm w() const { return compose(compose(x_, y_), t_); }

    friend bool operator==(const HurwitzMap&, const HurwitzMap&) = default;

private:
    Perm x_, y_, t_;
};

HurwitzMap new_map(std::size_t n, Perm x, Perm y, Perm t);

FixedPointVector fixed_point_vector(const HurwitzMap& m);
// Riemann-Hurwitz for the point stabilizer: 84(g-1) + 21a + 28b + 36c = n.
long genus(const HurwitzMap& m);
long genus_of(std::size_t n, const FixedPointVector& v);
Signature signature(const HurwitzMap& m);

std::vector<Handle> find_handles(const HurwitzMap& m, int k);
std::vector<Handle> all_handles(const HurwitzMap& m);
std::set<point> handle_points(const HurwitzMap& m);

struct WCycles {
    std::vector<std::vector<point>> cycles;
    std::vector<std::size_t> cycle_of;  // point -> index into cycles
    CycleType type() const;
    std::size_t length_at(point a) const { return cycles[cycle_of[a]].size(); }
};
WCycles w_cycles(const HurwitzMap& m);

struct UsefulCycle {
    std::size_t index;  // into WCycles::cycles
    std::size_t length;
    point x_witness;    // p with p^x in the cycle, p not an x-fixed handle point
    point y_witness;    // q with q^y in the cycle
};
std::vector<UsefulCycle> useful_cycles(const HurwitzMap& m);
std::vector<UsefulCycle> useful_cycles(const HurwitzMap& m, const WCycles& wc);

std::set<unsigned> prime_set(const HurwitzMap& m);
std::set<unsigned> prime_divisors(std::size_t v);
bool is_prime(unsigned long long v);

// Number of transpositions of an involution g (identity gives 0).
long tau(const HurwitzMap& m, const Perm& g);

// Text form: "hurwitz-map 1", "degree N", then "x ...", "y ...", "t ..." lines in cycle notation.
std::string write_map(const HurwitzMap& m);
HurwitzMap read_map(const std::string& text);

}  // namespace dhb
