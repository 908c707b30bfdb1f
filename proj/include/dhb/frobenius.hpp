#pragma once

#include "dhb/perm.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dhb {

using rational = boost::multiprecision::cpp_rational;

// A character value: exact when both parts were written as a/b, floating otherwise.
struct CharValue {
    bool exact = true;
    rational re = 0, im = 0;
    std::complex<double> approx;
};
CharValue parse_char_value(const std::string& token);

struct ClassInfo {
    std::string name;
    bigint size;
    unsigned order = 1;
    std::string inverse;
    std::optional<Perm> rep;
};

struct CharacterTable {
    std::string group;
    bigint order;
    double precision = 0;  // declared precision of floating entries
    std::size_t degree = 0;
    std::vector<Perm> generators;
    std::vector<ClassInfo> classes;
    std::vector<std::vector<CharValue>> characters;

    std::size_t class_index(const std::string& name) const;  // throws usage_error
};

// Text format "character-table 1"; see data/tables. Validates every invariant at load.
CharacterTable parse_table(const std::string& text);
CharacterTable load_table(const std::string& path);
// A bundled table by name ("S3", "S4", "A4", "A5", "L2_13").
CharacterTable bundled_table(const std::string& name);
std::vector<std::string> bundled_table_names();

// Largest |sum_C |C| chi(C) conj(psi(C)) - |G| [chi = psi]| / |G| over all row pairs.
double orthogonality_defect(const CharacterTable& t);

// Number of (x, y, z) in X x Y x Z with xyz = 1, by the character formula.
bigint frobenius_count(const CharacterTable& t, const std::string& X, const std::string& Y, const std::string& Z);
// Coefficient of the class sum of Z in the product of those of X and Y: n(X, Y, Z^-1) / |Z|.
rational class_sum_coefficient(const CharacterTable& t, const std::string& X, const std::string& Y,
                               const std::string& Z);

// Explicit enumeration of a small permutation group.
class FiniteGroup {
public:
    explicit FiniteGroup(const std::vector<Perm>& gens, std::size_t cap = 10000);
    std::size_t size() const { return elements_.size(); }
    bool contains(const Perm& g) const { return index_.count(g) != 0; }
    // The conjugacy class of g inside this group, computed by conjugating with every element.
    const std::set<Perm>& conjugacy_class(const Perm& g);
    // Ordered triples (x, y, z), x ~ X, y ~ Y, z ~ Z, with xyz = 1.
    bigint count(const Perm& X, const Perm& Y, const Perm& Z);

private:
    std::vector<Perm> elements_;
    std::map<Perm, std::size_t> index_;
    std::map<Perm, std::size_t> class_of_;  // element -> index into classes_
    std::deque<std::set<Perm>> classes_;    // deque: references stay valid as it grows
};

bigint brute_count(const std::vector<Perm>& gens, const Perm& X, const Perm& Y, const Perm& Z,
                   std::size_t cap = 10000);

}  // namespace dhb
