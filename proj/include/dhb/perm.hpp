#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dhb {

using point = std::uint32_t;
using bigint = boost::multiprecision::cpp_int;

// Bijection on {0..n-1}. Points act on the right: a^(pq) = (a^p)^q.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t n);
    explicit Perm(std::vector<point> images);

    std::size_t degree() const { return img_.size(); }
    point operator[](point a) const { return img_[a]; }
    const std::vector<point>& images() const { return img_; }
    bool is_identity() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<point> img_;
};

// Multiset of cycle lengths, sorted ascending, fixed points included.
using CycleType = std::vector<std::size_t>;

Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }
Perm inverse(const Perm& p);
Perm power(const Perm& p, long long k);

// Cycles in order of their least point; each cycle starts at its least point.
std::vector<std::vector<point>> cycles(const Perm& p, bool with_fixed = true);
CycleType cycle_type(const Perm& p);
std::size_t num_cycles(const Perm& p);
std::size_t num_fixed(const Perm& p);
int parity(const Perm& p);  // +1 even, -1 odd
bigint order(const Perm& p);

bool is_transitive(const std::vector<Perm>& gens, std::size_t n);

// Conjugacy inside the alternating group of the common degree.
bool an_conjugate(const Perm& p, const Perm& q);
// Some c with c^-1 p c = q, or empty when the cycle types differ.
std::vector<point> sn_conjugator(const Perm& p, const Perm& q);

// Exact order of <gens>, via a stabilizer chain.
bigint group_order(const std::vector<Perm>& gens);

std::string to_cycles(const Perm& p);
Perm parse_cycles(std::string_view text, std::size_t n);
std::string format_cycle_type(const CycleType& ct);  // "1^2 2^6"

}  // namespace dhb
