#include "dhb/certify.hpp"

#include "dhb/error.hpp"

#include <algorithm>
#include <map>

namespace dhb {

JordanCertificate jordan_certify(const HurwitzMap& m, unsigned p) {
    if (!is_prime(p)) throw usage_error(std::to_string(p) + " is not prime");
    JordanCertificate c;
    c.n = m.degree();
    c.p = p;
    c.transitive = is_transitive({m.x(), m.y()}, c.n);
    if (!c.transitive) c.failures.push_back("transitivity: <x, y> is not transitive");

    WCycles wc = w_cycles(m);
    c.w_type = wc.type();
    std::optional<std::size_t> idx;
    std::size_t divisible = 0;
    for (std::size_t i = 0; i < wc.cycles.size(); ++i) {
        std::size_t len = wc.cycles[i].size();
        if (len % p == 0) ++divisible;
        if (len == p && !idx) idx = i;
    }
    if (!idx) {
        c.failures.push_back("prime cycle: no w-cycle has length " + std::to_string(p));
    } else {
        c.cycle = wc.cycles[*idx];
        if (p + 3 > c.n)
            c.failures.push_back("degree bound: " + std::to_string(p) + " > n - 3 = " + std::to_string(c.n - 3));
    }
    if (divisible > 1 || (divisible == 1 && !idx))
        c.failures.push_back("coprimality: " + std::to_string(p) + " divides " + std::to_string(divisible) +
                             " w-cycle lengths");
    if (idx) {
        auto useful = useful_cycles(m, wc);
        auto it = std::find_if(useful.begin(), useful.end(), [&](const UsefulCycle& u) { return u.index == *idx; });
        if (it == useful.end()) {
            c.failures.push_back("usefulness: the w-cycle of length " + std::to_string(p) + " is not useful");
        } else {
            c.x_witness = it->x_witness;
            c.y_witness = it->y_witness;
        }
    }
    return c;
}

bool reverify(const HurwitzMap& m, const JordanCertificate& cert) {
    if (m.degree() != cert.n) return false;
    // Rebuild the evidence from x, y, t alone.
    HurwitzMap fresh(m.x(), m.y(), m.t());
    JordanCertificate again = jordan_certify(fresh, cert.p);
    if (again.failures != cert.failures || again.w_type != cert.w_type || again.transitive != cert.transitive)
        return false;
    if (!cert.ok()) return true;
    if (!cert.cycle || cert.cycle->size() != cert.p) return false;
    // The stored cycle must be a cycle of w, and the witnesses must land in it.
    Perm w = fresh.w();
    const auto& cyc = *cert.cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (cyc[i] >= cert.n || w[cyc[i]] != cyc[(i + 1) % cyc.size()]) return false;
    auto in_cycle = [&](point q) { return std::find(cyc.begin(), cyc.end(), q) != cyc.end(); };
    if (cert.x_witness >= cert.n || cert.y_witness >= cert.n) return false;
    if (!in_cycle(fresh.x()[cert.x_witness]) || !in_cycle(fresh.y()[cert.y_witness])) return false;
    if (fresh.x()[cert.x_witness] == cert.x_witness && handle_points(fresh).count(cert.x_witness)) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

bool has_order(const Perm& g, unsigned o) { return !g.is_identity() && order(g) == o; }

}  // namespace

BeauvilleEvidence beauville_check(const HurwitzMap& m1, const HurwitzMap& m2) {
    if (m1.degree() != m2.degree()) throw usage_error("beauville_check needs maps of equal degree");
    BeauvilleEvidence ev;
    ev.v1 = fixed_point_vector(m1);
    ev.v2 = fixed_point_vector(m2);
    struct Pos {
        const char* name;
        Perm g1, g2;
        unsigned ord;
    };
    Pos pos[] = {{"x", m1.x(), m2.x(), 2}, {"y", m1.y(), m2.y(), 3}, {"z", m1.z(), m2.z(), 7}};
    for (const Pos& p : pos)
        if (!has_order(p.g1, p.ord) || !has_order(p.g2, p.ord))
            throw check_error(std::string("triple is not of type (2,3,7): ") + p.name + " does not have order " +
                              std::to_string(p.ord));
    for (const Pos& p : pos) {
        PositionEvidence e;
        e.position = p.name;
        e.type1 = cycle_type(p.g1);
        e.type2 = cycle_type(p.g2);
        if (e.type1 != e.type2) {
            // Every non-identity power of an element of prime order has that element's cycle type.
            e.method = "cycle type";
            e.ok = true;
        } else {
            e.method = "alternating-group conjugacy";
            e.ok = true;
            for (unsigned k = 1; k < p.ord && e.ok; ++k)
                if (an_conjugate(power(p.g1, k), p.g2)) e.ok = false;
            if (!e.ok)
                ev.failures.push_back(std::string("position ") + p.name + ": a power of " + p.name +
                                      "1 is conjugate in A_n to " + p.name + "2");
        }
        ev.positions.push_back(std::move(e));
    }
    return ev;
}

DHBCertificate certify_dhb(const Plan& plan, const JoinObserver* obs) {
    MapPair pair = build_pair(plan, obs);
    JordanCertificate j1 = jordan_certify(pair.w1.map, plan.prime);
    JordanCertificate j2 = jordan_certify(pair.w2.map, plan.prime);
    BeauvilleEvidence b = beauville_check(pair.w1.map, pair.w2.map);
    FixedPointVector diff = b.v1 - b.v2;
    return DHBCertificate{plan, std::move(pair), std::move(j1), std::move(j2), std::move(b), diff};
}

// ---------------------------------------------------------------------------

MinDegreeResult min_degree_search(const SearchBounds& b) {
    if (b.g_max < 0 || b.alpha_max < 0 || b.beta_max < 0 || b.gamma_max < 0)
        throw usage_error("search bounds must be non-negative");
    std::map<long, std::vector<SignatureTuple>> by_degree;
    for (long g = 0; g <= b.g_max; ++g)
        for (long a = 0; a <= b.alpha_max; ++a)
            for (long be = 0; be <= b.beta_max; ++be)
                for (long c = 0; c <= b.gamma_max; ++c) {
                    long n = 84 * (g - 1) + 21 * a + 28 * be + 36 * c;
                    if (n > 0) by_degree[n].push_back({g, a, be, c});
                }
    for (const auto& [n, sigs] : by_degree) {
        MinDegreeResult res;
        for (std::size_t i = 0; i < sigs.size(); ++i)
            for (std::size_t j = i + 1; j < sigs.size(); ++j) {
                long da = sigs[i].alpha - sigs[j].alpha;
                long db = sigs[i].beta - sigs[j].beta;
                long dc = sigs[i].gamma - sigs[j].gamma;
                if (da != 0 && db != 0 && dc != 0 && da % 4 == 0 && db % 3 == 0 && dc % 7 == 0)
                    res.witnesses.emplace_back(sigs[i], sigs[j]);
            }
        if (!res.witnesses.empty()) {
            res.n = n;
            return res;
        }
    }
    throw check_error("no degree within the search bounds admits two compatible signatures");
}

// ---------------------------------------------------------------------------

long half_tau(const HurwitzMap& m) {
    long t = tau(m, m.x());
    if (t % 2 != 0) throw check_error("x is an odd permutation");
    return t / 2;
}

namespace {

std::vector<Handle> stock_handles(const Assembly& w) {
    std::vector<Handle> out;
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        if (w.parts[i].role == "stock" && w.parts[i].name == "G") {
            auto hs = free_handles(w, 1, i);
            out.insert(out.end(), hs.begin(), hs.end());
        }
    return out;
}

Assembly attach_leaf(const Assembly& w, BasicMapId id, const std::string& role, const JoinObserver* obs) {
    Assembly piece = Assembly::leaf(id, role);
    return join(w, stock_handle(w), piece, free_handles(piece, 1, std::size_t{0}).front(), obs);
}

}  // namespace

CoverCertificate certify_cover(const Plan& plan, const JoinObserver* obs) {
    if (plan.variant == Variant::small_n) throw usage_error("the cover adjustment needs a stock; small_n has none");
    DHBCertificate base = certify_dhb(plan, obs);

    Assembly w = build_common(plan, obs);
    long hw = half_tau(w.map);
    // A (1)-join adds one transposition pair: member i gets tau/2(common) + tau/2(marker i) + 1.
    long h1 = hw + half_tau(x_map(1).map) + 1;
    long h2 = hw + half_tau(x_map(2).map) + 1;
    if (h1 % 2 == h2 % 2)
        throw check_error("tau/2 of the two markers' maps have equal parity; no adjustment branch applies");
    bool branch_a = h1 % 2 != 0;

    // One handle for the marker plus two for the adjustment.
    std::size_t extra_g = 0;
    while (stock_handles(w).size() < 3) {
        w = attach_leaf(w, BasicMapId::G, "stock", obs);
        ++extra_g;
    }
    Assembly w1 = attach_marker(w, 1, obs);
    Assembly w2 = attach_marker(w, 2, obs);
    if (branch_a) {
        w1 = attach_leaf(w1, BasicMapId::E, "extra", obs);
        w2 = attach_leaf(w2, BasicMapId::A, "extra", obs);
        w2 = attach_leaf(w2, BasicMapId::A, "extra", obs);
    } else {
        auto hs = stock_handles(w2);
        w2 = self_join(w2, hs[0], hs[1], obs);
    }
    CoverCertificate c{std::move(base), branch_a ? "E+2A" : "internal join", extra_g, 0,
                       MapPair{plan, std::move(w1), std::move(w2)}, 0, 0, {}, {}, {}, {}, {}};
    c.degree = c.pair.w1.degree();
    if (c.pair.w2.degree() != c.degree) c.failures.push_back("the adjusted maps have different degrees");

    c.tau1 = tau(c.pair.w1.map, c.pair.w1.map.x());
    c.tau2 = tau(c.pair.w2.map, c.pair.w2.map.x());
    if (c.tau1 % 4 != 0) c.failures.push_back("lifting: tau(x1) = " + std::to_string(c.tau1) + " is not 0 mod 4");
    if (c.tau2 % 4 != 0) c.failures.push_back("lifting: tau(x2) = " + std::to_string(c.tau2) + " is not 0 mod 4");

    c.jordan1 = jordan_certify(c.pair.w1.map, plan.prime);
    c.jordan2 = jordan_certify(c.pair.w2.map, plan.prime);
    for (const auto& f : c.jordan1.failures) c.failures.push_back("W1 " + f);
    for (const auto& f : c.jordan2.failures) c.failures.push_back("W2 " + f);
    c.beauville = beauville_check(c.pair.w1.map, c.pair.w2.map);
    for (const auto& f : c.beauville.failures) c.failures.push_back(f);
    c.v_difference = c.beauville.v1 - c.beauville.v2;
    if (c.v_difference.alpha == 0 || c.v_difference.beta == 0 || c.v_difference.gamma == 0)
        c.failures.push_back("v-difference " + to_string(c.v_difference) + " has a zero coordinate");
    return c;
}

}  // namespace dhb
