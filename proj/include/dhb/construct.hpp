#pragma once

#include "dhb/compose.hpp"

#include <string>

namespace dhb {

enum class Variant { standard, shifted, r1_special, r8_special, small_n, s3_shortcut };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

// The fourteen core maps indexed by residue r = n mod 14.
struct CoreRecipe {
    const char* expr;     // composition expression
    std::size_t degree;
    unsigned prime;       // certifying prime
    std::size_t l;        // w-cycle length at the free (1)-handle's point b
    CycleType w_cycles;   // full w cycle type of the core map
};
const CoreRecipe& core_recipe(int r);

struct Plan {
    int r = 0;
    int s = 3;
    Variant variant = Variant::standard;
    int core_r = 0;       // which core map is used (differs from r for shifted and special plans)
    int stock_s = 3;      // stock size actually built (0: no stock)
    std::size_t degree = 0;
    unsigned prime = 0;
};

// Validates the parameter combination and fills in the derived fields.
Plan make_plan(int r, int s, Variant v);
Variant default_variant(int r);
// Smallest stock for the main route: reproduces the least degree in each residue class.
Plan minimal_plan(int r);

// Chain of s/3 copies of G, then A or E when s = 1 or 2 mod 3. Degree 14s.
Assembly stock_U(int s, const JoinObserver* obs = nullptr);
Assembly core_map(int r, const JoinObserver* obs = nullptr);
// Marker maps of degree 210: 4G + 3A and L(2)M.
Assembly x_map(int i, const JoinObserver* obs = nullptr);

struct MapPair {
    Plan plan;
    Assembly w1, w2;
};

// Shared part W of both maps (stock, core, extras), before the marker join.
Assembly build_common(const Plan& plan, const JoinObserver* obs = nullptr);
// The first free (1)-handle inside a stock copy of G; throws if none.
Handle stock_handle(const Assembly& w);
std::size_t free_stock_handles(const Assembly& w);
// The common part joined to marker map i, at the stock (or at the core's free handle when there is no stock).
Assembly attach_marker(const Assembly& w, int i, const JoinObserver* obs = nullptr);

// Builds both pair members and checks degree and that p divides exactly one w-cycle length in each.
MapPair build_pair(const Plan& plan, const JoinObserver* obs = nullptr);
// Stockless variant; rejects r = 4, 6, 10, where the w-cycle merged at the marker join has
// length l + 57 divisible by the certifying prime.
MapPair small_case(int r, const JoinObserver* obs = nullptr);

}  // namespace dhb
