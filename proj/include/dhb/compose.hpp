#pragma once

#include "dhb/atlas.hpp"
#include "dhb/map.hpp"

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dhb {

// Joins two maps along same-kind handles. D's points keep their labels, D2's shift by n.
// New x 2-cycles are (a, a') and (b, b'); y and t are the disjoint unions.
HurwitzMap k_compose(const HurwitzMap& D, const Handle& h, const HurwitzMap& D2, const Handle& h2);
// Joins two disjoint handles of one map; degree unchanged, genus up by one.
HurwitzMap self_join(const HurwitzMap& D, const Handle& h, const Handle& h2);

// Throws unless h is a t-symmetric (k)-handle of m.
void require_handle(const HurwitzMap& m, const Handle& h, const char* side);

// One join as seen by an observer. right is null for a self-join.
struct JoinEvent {
    const HurwitzMap* left;
    const HurwitzMap* right;
    Handle h, h2;
    const HurwitzMap* result;
};
using JoinObserver = std::function<void(const JoinEvent&)>;

// A composite map with a record of where each constituent basic map sits.
struct Part {
    std::string name;  // basic map letter
    point offset;
    std::size_t size;
    std::string role;  // free-form tag used by recipes ("stock", "v", "x", ...)
};

struct Assembly {
    HurwitzMap map;
    std::vector<Part> parts;

    static Assembly leaf(BasicMapId id, std::string role = {});
    std::size_t degree() const { return map.degree(); }
    // Tags every part with the given role.
    Assembly with_role(const std::string& role) const;
};

// t-symmetric k-handles whose two points both lie in the given part.
std::vector<Handle> free_handles(const Assembly& as, int k, std::size_t part);
// Same, over every part carrying the role, in part order.
std::vector<Handle> free_handles(const Assembly& as, int k, const std::string& role);
// The first free (1)-handle in the rightmost part that still has one.
Handle attach_handle(const Assembly& as);

Assembly join(const Assembly& L, const Handle& h, const Assembly& R, const Handle& h2,
              const JoinObserver* obs = nullptr);
Assembly self_join(const Assembly& A, const Handle& h, const Handle& h2, const JoinObserver* obs = nullptr);

// Composition expressions: expr := term (join term)*, join := '(' [123] ')',
// term := [A-N] | integer [A-N]; "mG" is m copies of G chained by (1)-joins.
struct Expr {
    bool is_leaf = true;
    BasicMapId id = BasicMapId::A;
    int k = 1;
    std::shared_ptr<const Expr> left, right;
};

Expr parse_expr(std::string_view text);
std::string to_string(const Expr& e);
// Each join uses the first free k-handle of the rightmost part built so far and
// the first free k-handle of the incoming operand.
Assembly eval_expr(const Expr& e, const JoinObserver* obs = nullptr);
Assembly eval_expr(std::string_view text, const JoinObserver* obs = nullptr);

struct MergeVerdict {
    std::string case_name;  // "neither shares", "left shares", "right shares", "both share"
    bool ok = false;
    std::string detail;
};

struct MergePrediction {
    std::string case_name;
    std::vector<std::set<point>> cycles;  // sorted
};

// Cycles of w' where p^w' = (p^s)^w with s = (a a2)(b b2), predicted from the cycles of w
// alone: two unions, one union, or the arc split when both pairs share a cycle.
MergePrediction predict_merge(const Perm& w, point a, point b, point a2, point b2);

// Checks the w-cycles of result = k_compose(D, h, D2, h2) against the cycle merge laws.
MergeVerdict merge_law_check(const HurwitzMap& D, const Handle& h, const HurwitzMap& D2, const Handle& h2,
                             const HurwitzMap& result);

// Every useful cycle of an operand lies, through its x-witness, inside a useful cycle of the result.
bool useful_persists(const JoinEvent& ev, std::string* detail = nullptr);

}  // namespace dhb
