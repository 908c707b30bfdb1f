#include "dhb/construct.hpp"

#include "dhb/error.hpp"

#include <algorithm>

namespace dhb {

std::string to_string(Variant v) {
    switch (v) {
    case Variant::standard: return "standard";
    case Variant::shifted: return "shifted";
    case Variant::r1_special: return "r1_special";
    case Variant::r8_special: return "r8_special";
    case Variant::small_n: return "small_n";
    case Variant::s3_shortcut: return "s3_shortcut";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    for (Variant v : {Variant::standard, Variant::shifted, Variant::r1_special, Variant::r8_special,
                      Variant::small_n, Variant::s3_shortcut})
        if (to_string(v) == s) return v;
    throw usage_error("unknown variant '" + s + "'");
}

const CoreRecipe& core_recipe(int r) {
    static const CoreRecipe table[14] = {
        {"H", 42, 17, 10, {1, 3, 10, 11, 17}},
        {"B(3)H", 57, 5, 10, {1, 3, 5, 10, 14, 24}},
        {"F(2)E(1)G(1)H", 142, 17, 13, {1, 2, 2, 3, 11, 13, 17, 22, 23, 24, 24}},
        {"E(2)I(2)F", 115, 17, 9, {1, 4, 9, 10, 17, 22, 22, 30}},
        {"J(1)K", 144, 17, 11, {1, 2, 5, 10, 11, 16, 17, 22, 60}},
        {"C(3)N(1)E(2)F", 187, 43, 17, {1, 2, 8, 17, 18, 20, 24, 24, 30, 43}},
        {"B(3)C(1)G(1)M(2)F", 216, 5, 13, {1, 2, 2, 5, 8, 11, 12, 13, 14, 24, 26, 34, 64}},
        {"C(1)E(2)E", 77, 17, 9, {1, 2, 4, 8, 9, 17, 18, 18}},
        {"B(3)C", 36, 5, 11, {1, 5, 8, 11, 11}},
        {"C(3)H(1)J", 135, 19, 11, {1, 1, 2, 3, 8, 10, 11, 16, 19, 21, 21, 22}},
        {"B(3)C(1)G(1)E(2)F", 136, 5, 13, {1, 2, 2, 5, 8, 11, 13, 22, 24, 24, 24}},
        {"C(1)J(1)J", 165, 19, 11, {1, 2, 2, 4, 8, 10, 10, 11, 16, 16, 19, 22, 22, 22}},
        {"J(1)M", 180, 47, 11, {1, 2, 10, 11, 12, 14, 16, 19, 22, 26, 47}},
        {"F(2)I(2)M", 195, 23, 51, {1, 4, 10, 12, 14, 23, 26, 26, 28, 51}},
    };
    if (r < 0 || r > 13) throw usage_error("residue r must be in 0..13");
    return table[r];
}

namespace {

bool in(int r, std::initializer_list<int> set) { return std::find(set.begin(), set.end(), r) != set.end(); }

int shifted_core(int r) {
    switch (r) {
    case 6: return 13;
    case 9: return 2;
    case 10: return 3;
    case 11: return 4;
    }
    throw usage_error("shifted plans exist only for r = 6, 9, 10, 11");
}

// On the main route a stock of 3, 4 or 5 cannot spare the extra handle, so three
// more copies' worth of stock is used; s = 3 without it is the shortcut variant.
int main_route_stock(int s) { return (s >= 3 && s <= 5) ? s + 3 : s; }

constexpr std::size_t marker_degree = 210;
constexpr std::size_t degree_C = 21;
constexpr std::size_t degree_M = 108;
// The (2)-join of M onto core 12 merges its 47-cycle with a 36-cycle of M.
constexpr unsigned r8_prime = 83;

}  // namespace

Variant default_variant(int r) {
    if (r == 1) return Variant::r1_special;
    if (r == 8) return Variant::r8_special;
    if (in(r, {6, 9, 10, 11})) return Variant::shifted;
    return Variant::standard;
}

Plan minimal_plan(int r) { return make_plan(r, 3, default_variant(r)); }

Plan make_plan(int r, int s, Variant v) {
    if (r < 0 || r > 13) throw usage_error("residue r must be in 0..13");
    Plan p;
    p.r = r;
    p.s = s;
    p.variant = v;
    auto need_stock = [&] {
        if (s < 3) throw usage_error("variant " + to_string(v) + " needs s >= 3");
    };
    switch (v) {
    case Variant::standard:
        if (!in(r, {0, 2, 3, 4, 5, 7, 12, 13}))
            throw usage_error("standard plans cover r = 0, 2, 3, 4, 5, 7, 12, 13; use variant " +
                              to_string(default_variant(r)));
        need_stock();
        p.core_r = r;
        p.stock_s = s;
        p.degree = 14 * static_cast<std::size_t>(s) + core_recipe(r).degree + marker_degree;
        p.prime = core_recipe(r).prime;
        break;
    case Variant::shifted:
    case Variant::s3_shortcut:
        if (v == Variant::s3_shortcut) {
            if (!in(r, {1, 6, 9, 10, 11})) throw usage_error("s3_shortcut covers r = 1, 6, 9, 10, 11");
            if (s != 3) throw usage_error("s3_shortcut needs s = 3");
            if (r == 1) {
                p.core_r = 5;
                p.stock_s = 3;
                p.degree = 42 + core_recipe(5).degree + degree_M + marker_degree;
                p.prime = core_recipe(5).prime;
                break;
            }
        } else {
            need_stock();
        }
        p.core_r = shifted_core(r);
        p.stock_s = v == Variant::s3_shortcut ? 3 : main_route_stock(s);
        p.degree = 14 * static_cast<std::size_t>(p.stock_s) + degree_C + core_recipe(p.core_r).degree + marker_degree;
        p.prime = core_recipe(p.core_r).prime;
        break;
    case Variant::r1_special:
        if (r != 1) throw usage_error("r1_special is only for r = 1");
        need_stock();
        p.core_r = 5;
        p.stock_s = main_route_stock(s);
        p.degree = 14 * static_cast<std::size_t>(p.stock_s) + core_recipe(5).degree + degree_M + marker_degree;
        p.prime = core_recipe(5).prime;
        break;
    case Variant::r8_special:
        if (r != 8) throw usage_error("r8_special is only for r = 8");
        need_stock();
        p.core_r = 12;
        p.stock_s = s;
        p.degree = 14 * static_cast<std::size_t>(s) + core_recipe(12).degree + degree_M + marker_degree;
        p.prime = r8_prime;
        break;
    case Variant::small_n: {
        if (s != 0) throw usage_error("small_n uses no stock; pass s = 0");
        const CoreRecipe& c = core_recipe(r);
        // The marker L(2)M meets the core at its free (1)-handle, whose point b
        // sits in a w-cycle of length 57; the merged cycle has length l + 57.
        Assembly x2 = x_map(2);
        Handle hx = free_handles(x2, 1, std::string("x")).front();
        std::size_t merged = c.l + w_cycles(x2.map).length_at(hx.b);
        if (merged % c.prime == 0)
            throw check_error("small_n rejected for r = " + std::to_string(r) + ": the w-cycle merged at the marker join has length " +
                              std::to_string(merged) + ", divisible by the certifying prime " +
                              std::to_string(c.prime));
        p.core_r = r;
        p.stock_s = 0;
        p.degree = c.degree + marker_degree;
        p.prime = c.prime;
        break;
    }
    }
    return p;
}

// ---------------------------------------------------------------------------

namespace {

Assembly chain_onto_last(Assembly acc, BasicMapId id, const JoinObserver* obs) {
    Assembly next = Assembly::leaf(id, acc.parts.back().role);
    auto hl = free_handles(acc, 1, acc.parts.size() - 1);
    if (hl.empty()) throw check_error("no free (1)-handle at the end of the chain");
    return join(acc, hl.front(), next, free_handles(next, 1, std::size_t{0}).front(), obs);
}

Assembly attach_at(const Assembly& acc, const Handle& h, BasicMapId id, const std::string& role, int k,
                   const JoinObserver* obs) {
    Assembly piece = Assembly::leaf(id, role);
    auto hr = free_handles(piece, k, std::size_t{0});
    if (hr.empty()) throw check_error(std::string("basic map ") + letter(id) + " has no free handle of that kind");
    return join(acc, h, piece, hr.front(), obs);
}

}  // namespace

Assembly stock_U(int s, const JoinObserver* obs) {
    if (s < 3) throw usage_error("stock needs s >= 3");
    Assembly u = Assembly::leaf(BasicMapId::G, "stock");
    for (int i = 1; i < s / 3; ++i) u = chain_onto_last(std::move(u), BasicMapId::G, obs);
    if (s % 3 == 1) u = chain_onto_last(std::move(u), BasicMapId::A, obs);
    if (s % 3 == 2) u = chain_onto_last(std::move(u), BasicMapId::E, obs);
    return u;
}

Assembly core_map(int r, const JoinObserver* obs) {
    return eval_expr(core_recipe(r).expr, obs).with_role("core");
}

Assembly x_map(int i, const JoinObserver* obs) {
    if (i == 1) {
        Assembly x = Assembly::leaf(BasicMapId::G, "x");
        for (int j = 0; j < 3; ++j) x = chain_onto_last(std::move(x), BasicMapId::G, obs);
        // A has a single (1)-handle, so the three copies hang off the G chain.
        for (int j = 0; j < 3; ++j)
            x = attach_at(x, free_handles(x, 1, std::string("x")).front(), BasicMapId::A, "x", 1, obs);
        return x;
    }
    if (i == 2) return eval_expr("L(2)M", obs).with_role("x");
    throw usage_error("marker index must be 1 or 2");
}

std::size_t free_stock_handles(const Assembly& w) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        if (w.parts[i].role == "stock" && w.parts[i].name == "G") c += free_handles(w, 1, i).size();
    return c;
}

Handle stock_handle(const Assembly& w) {
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        if (w.parts[i].role == "stock" && w.parts[i].name == "G") {
            auto hs = free_handles(w, 1, i);
            if (!hs.empty()) return hs.front();
        }
    throw check_error("no free (1)-handle left in the stock copies of G");
}

Assembly build_common(const Plan& plan, const JoinObserver* obs) {
    if (plan.variant == Variant::small_n) return core_map(plan.core_r, obs);
    Assembly w = stock_U(plan.stock_s, obs);
    auto add_core = [&](int r) {
        Assembly core = core_map(r, obs);
        w = join(w, stock_handle(w), core, attach_handle(core), obs);
    };
    switch (plan.variant) {
    case Variant::standard:
        add_core(plan.core_r);
        break;
    case Variant::shifted:
    case Variant::s3_shortcut:
        if (plan.r == 1) {
            add_core(5);
            w = attach_at(w, stock_handle(w), BasicMapId::M, "extra", 1, obs);
        } else {
            w = attach_at(w, stock_handle(w), BasicMapId::C, "extra", 1, obs);
            add_core(plan.core_r);
        }
        break;
    case Variant::r1_special:
        add_core(5);
        w = attach_at(w, stock_handle(w), BasicMapId::M, "extra", 1, obs);
        break;
    case Variant::r8_special: {
        add_core(12);
        // M's free (2)-handle inside the core, joined to a fresh M.
        Handle h{};
        bool found = false;
        for (std::size_t i = 0; i < w.parts.size() && !found; ++i)
            if (w.parts[i].role == "core" && w.parts[i].name == "M") {
                auto hs = free_handles(w, 2, i);
                if (!hs.empty()) {
                    h = hs.front();
                    found = true;
                }
            }
        if (!found) throw check_error("core map has no free (2)-handle in M");
        w = attach_at(w, h, BasicMapId::M, "extra", 2, obs);
        break;
    }
    case Variant::small_n:
        break;
    }
    return w;
}

Assembly attach_marker(const Assembly& w, int i, const JoinObserver* obs) {
    Assembly x = x_map(i);
    Handle hw = free_stock_handles(w) > 0 ? stock_handle(w) : attach_handle(w);
    return join(w, hw, x, free_handles(x, 1, std::string("x")).front(), obs);
}

namespace {

void check_prime_cycle(const Assembly& w, unsigned p, const char* which) {
    std::size_t hits = 0;
    std::vector<std::size_t> offenders;
    for (std::size_t len : w_cycles(w.map).type())
        if (len % p == 0) {
            ++hits;
            offenders.push_back(len);
        }
    if (hits != 1) {
        std::string list;
        for (auto l : offenders) list += (list.empty() ? "" : ", ") + std::to_string(l);
        throw check_error(std::string(which) + ": prime " + std::to_string(p) + " divides " +
                          (hits == 0 ? "no w-cycle length" : "several w-cycle lengths (" + list + ")"));
    }
}

}  // namespace

MapPair build_pair(const Plan& plan, const JoinObserver* obs) {
    Assembly w = build_common(plan, obs);
    MapPair pair{plan, attach_marker(w, 1, obs), attach_marker(w, 2, obs)};
    for (const Assembly* m : {&pair.w1, &pair.w2})
        if (m->degree() != plan.degree)
            throw check_error("built degree " + std::to_string(m->degree()) + " differs from planned " +
                              std::to_string(plan.degree));
    check_prime_cycle(pair.w1, plan.prime, "W1");
    check_prime_cycle(pair.w2, plan.prime, "W2");
    return pair;
}

MapPair small_case(int r, const JoinObserver* obs) { return build_pair(make_plan(r, 0, Variant::small_n), obs); }

}  // namespace dhb
