#include "dhb/perm.hpp"

#include "dhb/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace dhb {

Perm::Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), point{0}); }

Perm::Perm(std::vector<point> images) : img_(std::move(images)) {
    if (img_.empty()) throw usage_error("permutation of degree 0");
    std::vector<bool> seen(img_.size(), false);
    for (point v : img_) {
        if (v >= img_.size() || seen[v])
            throw usage_error("not a bijection on 0.." + std::to_string(img_.size() - 1));
        seen[v] = true;
    }
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw usage_error("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
    std::vector<point> r(p.degree());
    for (std::size_t a = 0; a < r.size(); ++a) r[a] = q[p[a]];
    return Perm(std::move(r));
}

Perm inverse(const Perm& p) {
    std::vector<point> r(p.degree());
    for (std::size_t a = 0; a < r.size(); ++a) r[p[a]] = static_cast<point>(a);
    return Perm(std::move(r));
}

Perm power(const Perm& p, long long k) {
    // Walk each cycle once instead of multiplying.
    std::vector<point> r(p.degree());
    for (const auto& c : cycles(p)) {
        long long len = static_cast<long long>(c.size());
        long long s = ((k % len) + len) % len;
        for (std::size_t i = 0; i < c.size(); ++i) r[c[i]] = c[(i + s) % c.size()];
    }
    return Perm(std::move(r));
}

std::vector<std::vector<point>> cycles(const Perm& p, bool with_fixed) {
    std::vector<std::vector<point>> out;
    std::vector<bool> seen(p.degree(), false);
    for (point a = 0; a < p.degree(); ++a) {
        if (seen[a]) continue;
        std::vector<point> c;
        for (point b = a; !seen[b]; b = p[b]) {
            seen[b] = true;
            c.push_back(b);
        }
        if (with_fixed || c.size() > 1) out.push_back(std::move(c));
    }
    return out;
}

CycleType cycle_type(const Perm& p) {
    CycleType ct;
    for (const auto& c : cycles(p)) ct.push_back(c.size());
    std::sort(ct.begin(), ct.end());
    return ct;
}

std::size_t num_cycles(const Perm& p) { return cycles(p).size(); }

std::size_t num_fixed(const Perm& p) {
    std::size_t f = 0;
    for (point a = 0; a < p.degree(); ++a) f += (p[a] == a);
    return f;
}

int parity(const Perm& p) { return (p.degree() - num_cycles(p)) % 2 == 0 ? 1 : -1; }

bigint order(const Perm& p) {
    bigint r = 1;
    for (std::size_t len : cycle_type(p)) {
        bigint l = len;
        r = r / boost::multiprecision::gcd(r, l) * l;
    }
    return r;
}

bool is_transitive(const std::vector<Perm>& gens, std::size_t n) {
    if (n == 1) return true;
    if (gens.empty()) throw usage_error("empty generator list");
    for (const auto& g : gens)
        if (g.degree() != n) throw usage_error("generator degree differs from n");
    std::vector<bool> seen(n, false);
    std::vector<point> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        point a = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            point b = g[a];
            if (!seen[b]) {
                seen[b] = true;
                ++reached;
                stack.push_back(b);
            }
        }
    }
    return reached == n;
}

std::vector<point> sn_conjugator(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw usage_error("degree mismatch");
    if (cycle_type(p) != cycle_type(q)) return {};
    // Pair cycles of equal length in order of appearance; c maps p's cycle onto q's.
    std::map<std::size_t, std::vector<std::vector<point>>> by_len;
    for (auto& c : cycles(q)) by_len[c.size()].push_back(std::move(c));
    std::map<std::size_t, std::size_t> used;
    std::vector<point> c(p.degree());
    for (const auto& cp : cycles(p)) {
        const auto& cq = by_len[cp.size()][used[cp.size()]++];
        for (std::size_t i = 0; i < cp.size(); ++i) c[cp[i]] = cq[i];
    }
    return c;
}

bool an_conjugate(const Perm& p, const Perm& q) {
    if (parity(p) != 1 || parity(q) != 1) throw usage_error("an_conjugate needs even permutations");
    auto cv = sn_conjugator(p, q);
    if (cv.empty()) return false;
    Perm c(std::move(cv));
    if (parity(c) == 1) return true;
    // Need an odd element of the centralizer of p: an even-length cycle, or a swap
    // of two cycles of equal odd length. Without one, the S_n class splits.
    auto cs = cycles(p);
    std::vector<point> z(p.degree());
    std::iota(z.begin(), z.end(), point{0});
    bool found = false;
    for (const auto& cyc : cs)
        if (cyc.size() % 2 == 0) {
            for (std::size_t i = 0; i < cyc.size(); ++i) z[cyc[i]] = cyc[(i + 1) % cyc.size()];
            found = true;
            break;
        }
    if (!found) {
        std::map<std::size_t, const std::vector<point>*> first;
        for (const auto& cyc : cs) {
            auto [it, fresh] = first.emplace(cyc.size(), &cyc);
            if (!fresh) {
                const auto& o = *it->second;
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    z[o[i]] = cyc[i];
                    z[cyc[i]] = o[i];
                }
                found = true;
                break;
            }
        }
    }
    if (!found) return false;
    Perm c2 = compose(Perm(std::move(z)), c);
    if (parity(c2) != 1 || compose(compose(inverse(c2), p), c2) != q)
        throw check_error("centralizer correction produced a bad conjugator");
    return true;
}

// ---------------------------------------------------------------------------
// Stabilizer chain. Random Schreier-Sims builds a chain whose orbit product is a
// lower bound for |G|; it is exact once it meets n!/2 (all generators even) or
// n!. Otherwise every Schreier generator is sifted before the answer is trusted.

namespace {

using small_perm = std::vector<std::uint16_t>;

struct Level {
    std::uint16_t base = 0;
    std::vector<std::size_t> gens;    // indices into Chain::gens_
    std::vector<std::int32_t> slot;   // point -> index into orbit, or -1
    std::vector<std::uint16_t> orbit;
    std::vector<small_perm> inv_rep;  // u_d^-1 where base^u_d = d
};

class Chain {
public:
    explicit Chain(std::size_t n) : n_(n) {}

    // Returns true if g sifted to the identity.
    bool sift(small_perm& g, std::size_t& level) const {
        small_perm tmp(n_);
        for (level = 0; level < levels_.size(); ++level) {
            const Level& L = levels_[level];
            std::int32_t s = L.slot[g[L.base]];
            if (s < 0) return false;
            const small_perm& u = L.inv_rep[s];
            for (std::size_t a = 0; a < n_; ++a) tmp[a] = u[g[a]];
            g.swap(tmp);
        }
        return is_id(g);
    }

    void add(const small_perm& h, std::size_t level) {
        if (level == levels_.size()) {
            Level L;
            for (std::size_t a = 0; a < n_; ++a)
                if (h[a] != a) {
                    L.base = static_cast<std::uint16_t>(a);
                    break;
                }
            L.slot.assign(n_, -1);
            L.slot[L.base] = 0;
            L.orbit.push_back(L.base);
            small_perm id(n_);
            std::iota(id.begin(), id.end(), std::uint16_t{0});
            L.inv_rep.push_back(id);
            levels_.push_back(std::move(L));
        }
        small_perm hi(n_);
        for (std::size_t a = 0; a < n_; ++a) hi[h[a]] = static_cast<std::uint16_t>(a);
        gens_.push_back(h);
        gens_inv_.push_back(std::move(hi));
        for (std::size_t i = 0; i <= level; ++i) {
            levels_[i].gens.push_back(gens_.size() - 1);
            extend(levels_[i]);
        }
    }

    bigint size() const {
        bigint r = 1;
        for (const auto& L : levels_) r *= L.orbit.size();
        return r;
    }

    // Sift every Schreier generator; add the first failure. True if none failed.
    bool verify_once() {
        small_perm g(n_);
        for (std::size_t i = levels_.size(); i-- > 0;) {
            const Level& L = levels_[i];
            for (std::size_t k = 0; k < L.orbit.size(); ++k)
                for (std::size_t j = 0; j < L.gens.size(); ++j) {
                    const small_perm& s = gens_[L.gens[j]];
                    std::uint16_t e = s[L.orbit[k]];
                    const small_perm& ud_inv = L.inv_rep[k];
                    const small_perm& ue_inv = L.inv_rep[L.slot[e]];
                    // u_d s u_e^-1; u_d = inverse of ud_inv.
                    small_perm ud(n_);
                    for (std::size_t a = 0; a < n_; ++a) ud[ud_inv[a]] = static_cast<std::uint16_t>(a);
                    for (std::size_t a = 0; a < n_; ++a) g[a] = ue_inv[s[ud[a]]];
                    std::size_t lvl;
                    if (!sift(g, lvl)) {
                        add(g, lvl);
                        return false;
                    }
                }
        }
        return true;
    }

private:
    static bool is_id(const small_perm& g) {
        for (std::size_t a = 0; a < g.size(); ++a)
            if (g[a] != a) return false;
        return true;
    }

    // Grows the orbit after a generator joined the level (it is last in L.gens):
    // old points only need that generator, newly found points need all of them.
    void extend(Level& L) {
        std::size_t old_size = L.orbit.size();
        for (std::size_t k = 0; k < L.orbit.size(); ++k)
            for (std::size_t j = k < old_size ? L.gens.size() - 1 : 0; j < L.gens.size(); ++j) {
                std::size_t gi = L.gens[j];
                std::uint16_t e = gens_[gi][L.orbit[k]];
                if (L.slot[e] >= 0) continue;
                const small_perm& hi = gens_inv_[gi];
                small_perm r(n_);
                const small_perm& ud_inv = L.inv_rep[k];
                for (std::size_t a = 0; a < n_; ++a) r[a] = ud_inv[hi[a]];
                L.slot[e] = static_cast<std::int32_t>(L.orbit.size());
                L.orbit.push_back(e);
                L.inv_rep.push_back(std::move(r));
            }
    }

    std::size_t n_;
    std::vector<small_perm> gens_, gens_inv_;
    std::vector<Level> levels_;
};

}  // namespace

bigint group_order(const std::vector<Perm>& gens) {
    if (gens.empty()) throw usage_error("group_order: empty generator list");
    std::size_t n = gens[0].degree();
    if (n > 65535) throw usage_error("group_order: degree above 65535");
    for (const auto& g : gens)
        if (g.degree() != n) throw usage_error("group_order: generators of different degree");

    std::vector<small_perm> pool;
    for (const auto& g : gens) {
        if (g.is_identity()) continue;
        pool.emplace_back(g.images().begin(), g.images().end());
    }
    if (pool.empty()) return 1;

    bigint full = 1;
    for (std::size_t i = 2; i <= n; ++i) full *= i;
    bool all_even = std::all_of(gens.begin(), gens.end(), [](const Perm& g) { return parity(g) == 1; });
    bigint bound = all_even ? full / (n >= 2 ? 2 : 1) : full;

    Chain chain(n);
    for (const auto& g : pool) {
        small_perm h = g;
        std::size_t lvl;
        if (!chain.sift(h, lvl)) chain.add(h, lvl);
    }

    // Product replacement, fixed seed for reproducibility.
    std::mt19937_64 rng(0x5eed);
    std::vector<small_perm> slots = pool;
    while (slots.size() < 10) slots.push_back(pool[slots.size() % pool.size()]);
    small_perm acc(n);
    std::iota(acc.begin(), acc.end(), std::uint16_t{0});
    small_perm tmp(n);
    auto step = [&] {
        std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        while (j == i) j = pick(rng);
        auto& si = slots[i];
        const auto& sj = slots[j];
        for (std::size_t a = 0; a < n; ++a) tmp[a] = sj[si[a]];
        si.swap(tmp);
        for (std::size_t a = 0; a < n; ++a) tmp[a] = si[acc[a]];
        acc.swap(tmp);
    };
    for (int i = 0; i < 60; ++i) step();

    int quiet = 0;
    while (chain.size() < bound && quiet < 48) {
        step();
        small_perm h = acc;
        std::size_t lvl;
        if (chain.sift(h, lvl)) {
            ++quiet;
        } else {
            chain.add(h, lvl);
            quiet = 0;
        }
    }
    if (chain.size() == bound) return bound;
    while (!chain.verify_once()) {
    }
    return chain.size();
}

// ---------------------------------------------------------------------------

std::string to_cycles(const Perm& p) {
    std::ostringstream os;
    for (const auto& c : cycles(p, false)) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

Perm parse_cycles(std::string_view text, std::size_t n) {
    if (n == 0) throw usage_error("degree 0");
    std::vector<point> img(n);
    std::iota(img.begin(), img.end(), point{0});
    std::vector<bool> used(n, false);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw parse_error("expected '('", i);
        ++i;
        std::vector<point> cyc;
        for (;;) {
            skip();
            if (i >= text.size()) throw parse_error("unterminated cycle", i);
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw parse_error("expected a point", i);
            std::size_t start = i;
            unsigned long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<unsigned>(text[i] - '0');
                if (v >= n) throw parse_error("point out of range for degree " + std::to_string(n), start);
                ++i;
            }
            if (used[v]) throw parse_error("point " + std::to_string(v) + " repeated", start);
            used[v] = true;
            cyc.push_back(static_cast<point>(v));
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip();
    }
    return Perm(std::move(img));
}

std::string format_cycle_type(const CycleType& ct) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ct.size();) {
        std::size_t j = i;
        while (j < ct.size() && ct[j] == ct[i]) ++j;
        if (i) os << ' ';
        os << ct[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

}  // namespace dhb
