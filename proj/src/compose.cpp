#include "dhb/compose.hpp"

#include "dhb/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace dhb {

void require_handle(const HurwitzMap& m, const Handle& h, const char* side) {
    auto fail = [&](const std::string& why) {
        throw check_error(std::string(side) + " handle (" + std::to_string(h.a) + "," + std::to_string(h.b) +
                          ") " + why);
    };
    if (h.k < 1 || h.k > 3) fail("has kind outside 1..3");
    if (h.a >= m.degree() || h.b >= m.degree()) fail("is out of range");
    if (h.a == h.b) fail("is degenerate");
    if (m.x()[h.a] != h.a || m.x()[h.b] != h.b) fail("is not a pair of x-fixed points");
    if (power(compose(m.x(), m.y()), h.k)[h.a] != h.b) fail("does not satisfy b = a(xy)^" + std::to_string(h.k));
    if (m.t()[h.a] != h.b) fail("is not swapped by the reflection t");
}

HurwitzMap k_compose(const HurwitzMap& D, const Handle& h, const HurwitzMap& D2, const Handle& h2) {
    if (h.k != h2.k)
        throw usage_error("handle kind mismatch: (" + std::to_string(h.k) + ") vs (" + std::to_string(h2.k) + ")");
    require_handle(D, h, "left");
    require_handle(D2, h2, "right");
    std::size_t n = D.degree(), n2 = D2.degree();
    std::vector<point> x(n + n2), y(n + n2), t(n + n2);
    for (point p = 0; p < n; ++p) {
        x[p] = D.x()[p];
        y[p] = D.y()[p];
        t[p] = D.t()[p];
    }
    for (point p = 0; p < n2; ++p) {
        x[n + p] = static_cast<point>(n + D2.x()[p]);
        y[n + p] = static_cast<point>(n + D2.y()[p]);
        t[n + p] = static_cast<point>(n + D2.t()[p]);
    }
    point a2 = static_cast<point>(n + h2.a), b2 = static_cast<point>(n + h2.b);
    x[h.a] = a2;
    x[a2] = h.a;
    x[h.b] = b2;
    x[b2] = h.b;
    return HurwitzMap(Perm(std::move(x)), Perm(std::move(y)), Perm(std::move(t)));
}

HurwitzMap self_join(const HurwitzMap& D, const Handle& h, const Handle& h2) {
    if (h.k != h2.k)
        throw usage_error("handle kind mismatch: (" + std::to_string(h.k) + ") vs (" + std::to_string(h2.k) + ")");
    require_handle(D, h, "first");
    require_handle(D, h2, "second");
    std::set<point> pts{h.a, h.b, h2.a, h2.b};
    if (pts.size() != 4) throw check_error("self-join needs disjoint handles");
    std::vector<point> x = D.x().images();
    x[h.a] = h2.a;
    x[h2.a] = h.a;
    x[h.b] = h2.b;
    x[h2.b] = h.b;
    return HurwitzMap(Perm(std::move(x)), D.y(), D.t());
}

// ---------------------------------------------------------------------------

Assembly Assembly::leaf(BasicMapId id, std::string role) {
    const HurwitzMap& m = basic_map(id);
    return Assembly{m, {Part{std::string(1, letter(id)), 0, m.degree(), std::move(role)}}};
}

Assembly Assembly::with_role(const std::string& role) const {
    Assembly out = *this;
    for (auto& p : out.parts) p.role = role;
    return out;
}

std::vector<Handle> free_handles(const Assembly& as, int k, std::size_t part) {
    if (part >= as.parts.size()) throw usage_error("part index out of range");
    const Part& p = as.parts[part];
    auto inside = [&](point q) { return q >= p.offset && q < p.offset + p.size; };
    std::vector<Handle> out;
    for (const auto& h : find_handles(as.map, k))
        if (h.t_symmetric && inside(h.a) && inside(h.b)) out.push_back(h);
    return out;
}

std::vector<Handle> free_handles(const Assembly& as, int k, const std::string& role) {
    std::vector<Handle> out;
    for (std::size_t i = 0; i < as.parts.size(); ++i)
        if (as.parts[i].role == role)
            for (const auto& h : free_handles(as, k, i)) out.push_back(h);
    return out;
}

Handle attach_handle(const Assembly& as) {
    for (std::size_t i = as.parts.size(); i-- > 0;) {
        auto hs = free_handles(as, 1, i);
        if (!hs.empty()) return hs.front();
    }
    throw check_error("no free (1)-handle left");
}

Assembly join(const Assembly& L, const Handle& h, const Assembly& R, const Handle& h2, const JoinObserver* obs) {
    Assembly out{k_compose(L.map, h, R.map, h2), L.parts};
    for (Part p : R.parts) {
        p.offset += static_cast<point>(L.degree());
        out.parts.push_back(std::move(p));
    }
    if (obs && *obs) (*obs)(JoinEvent{&L.map, &R.map, h, h2, &out.map});
    return out;
}

Assembly self_join(const Assembly& A, const Handle& h, const Handle& h2, const JoinObserver* obs) {
    Assembly out{self_join(A.map, h, h2), A.parts};
    if (obs && *obs) (*obs)(JoinEvent{&A.map, nullptr, h, h2, &out.map});
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    static std::shared_ptr<const Expr> leaf(BasicMapId id) {
        auto e = std::make_shared<Expr>();
        e->id = id;
        return e;
    }

    static std::shared_ptr<const Expr> node(std::shared_ptr<const Expr> l, int k, std::shared_ptr<const Expr> r) {
        auto e = std::make_shared<Expr>();
        e->is_leaf = false;
        e->k = k;
        e->left = std::move(l);
        e->right = std::move(r);
        return e;
    }

    // A term becomes a left chain; returns its pieces so the caller can splice.
    std::vector<BasicMapId> term() {
        skip();
        std::size_t start = i;
        unsigned long m = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            m = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                m = m * 10 + static_cast<unsigned>(s[i] - '0');
                if (m > 10000) throw parse_error("multiplicity too large", start);
                ++i;
            }
            if (m == 0) throw parse_error("multiplicity must be positive", start);
            skip();
        }
        if (i >= s.size() || s[i] < 'A' || s[i] > 'N') throw parse_error("expected a basic map letter A-N", i);
        BasicMapId id = basic_map_id(s[i++]);
        return std::vector<BasicMapId>(m, id);
    }

    Expr parse() {
        std::shared_ptr<const Expr> acc;
        auto append = [&](const std::vector<BasicMapId>& ids, int k) {
            for (std::size_t j = 0; j < ids.size(); ++j) {
                auto l = leaf(ids[j]);
                acc = acc ? node(acc, j == 0 ? k : 1, l) : l;
            }
        };
        append(term(), 1);
        skip();
        while (i < s.size()) {
            if (s[i] != '(') throw parse_error("expected '(' before a join kind", i);
            ++i;
            skip();
            if (i >= s.size() || s[i] < '1' || s[i] > '3') throw parse_error("join kind must be 1, 2 or 3", i);
            int k = s[i++] - '0';
            skip();
            if (i >= s.size() || s[i] != ')') throw parse_error("expected ')'", i);
            ++i;
            append(term(), k);
            skip();
        }
        return *acc;
    }
};

}  // namespace

Expr parse_expr(std::string_view text) {
    Parser p{text};
    p.skip();
    if (p.i >= text.size()) throw parse_error("empty expression", 0);
    return p.parse();
}

std::string to_string(const Expr& e) {
    if (e.is_leaf) return std::string(1, letter(e.id));
    return to_string(*e.left) + "(" + std::to_string(e.k) + ")" + to_string(*e.right);
}

Assembly eval_expr(const Expr& e, const JoinObserver* obs) {
    if (e.is_leaf) return Assembly::leaf(e.id);
    Assembly L = eval_expr(*e.left, obs);
    Assembly R = eval_expr(*e.right, obs);
    std::size_t last = L.parts.size() - 1;
    auto hl = free_handles(L, e.k, last);
    if (hl.empty())
        throw check_error("no free (" + std::to_string(e.k) + ")-handle in " + L.parts[last].name + " (part " +
                          std::to_string(last + 1) + ")");
    auto hr = free_handles(R, e.k, std::size_t{0});
    if (hr.empty()) throw check_error("no free (" + std::to_string(e.k) + ")-handle in " + R.parts[0].name);
    return join(L, hl.front(), R, hr.front(), obs);
}

Assembly eval_expr(std::string_view text, const JoinObserver* obs) { return eval_expr(parse_expr(text), obs); }

// ---------------------------------------------------------------------------

namespace {

// Points strictly after `from` up to and including `to`, walking forward along cycle c.
std::set<point> arc(const std::vector<point>& c, point from, point to) {
    std::size_t i = std::find(c.begin(), c.end(), from) - c.begin();
    std::set<point> out;
    for (std::size_t step = 1; step <= c.size(); ++step) {
        point q = c[(i + step) % c.size()];
        out.insert(q);
        if (q == to) break;
    }
    return out;
}

}  // namespace

MergePrediction predict_merge(const Perm& w, point a, point b, point a2, point b2) {
    MergePrediction mp;
    auto old_cycles = cycles(w);
    std::vector<std::size_t> where(w.degree());
    for (std::size_t i = 0; i < old_cycles.size(); ++i)
        for (point p : old_cycles[i]) where[p] = i;

    bool left = where[a] == where[b], right = where[a2] == where[b2];
    mp.case_name = left && right ? "both share" : left ? "left shares" : right ? "right shares" : "neither shares";

    std::set<std::size_t> touched{where[a], where[b], where[a2], where[b2]};
    auto pts = [&](std::size_t i) { return std::set<point>(old_cycles[i].begin(), old_cycles[i].end()); };
    auto unite = [](std::set<point> s, const std::set<point>& t) {
        s.insert(t.begin(), t.end());
        return s;
    };

    auto& predicted = mp.cycles;
    if (!left && !right) {
        predicted.push_back(unite(pts(where[a]), pts(where[a2])));
        predicted.push_back(unite(pts(where[b]), pts(where[b2])));
    } else if (left != right) {
        std::set<point> all;
        for (std::size_t i : touched) all = unite(all, pts(i));
        predicted.push_back(all);
    } else {
        const auto& c = old_cycles[where[a]];
        const auto& c2 = old_cycles[where[a2]];
        predicted.push_back(unite(arc(c, b, a), arc(c2, a2, b2)));
        predicted.push_back(unite(arc(c, a, b), arc(c2, b2, a2)));
    }
    for (std::size_t i = 0; i < old_cycles.size(); ++i)
        if (!touched.count(i)) predicted.push_back(pts(i));
    std::sort(predicted.begin(), predicted.end());
    return mp;
}

MergeVerdict merge_law_check(const HurwitzMap& D, const Handle& h, const HurwitzMap& D2, const Handle& h2,
                             const HurwitzMap& result) {
    std::size_t n = D.degree();
    // Old w on the disjoint union, right operand shifted.
    std::vector<point> img(n + D2.degree());
    Perm w = D.w(), w2 = D2.w();
    for (point p = 0; p < n; ++p) img[p] = w[p];
    for (point p = 0; p < D2.degree(); ++p) img[n + p] = static_cast<point>(n + w2[p]);
    auto shift = [&](point p) { return static_cast<point>(n + p); };
    MergePrediction mp = predict_merge(Perm(std::move(img)), h.a, h.b, shift(h2.a), shift(h2.b));

    std::vector<std::set<point>> observed;
    for (const auto& c : cycles(result.w())) observed.emplace_back(c.begin(), c.end());
    std::sort(observed.begin(), observed.end());

    MergeVerdict v;
    v.case_name = mp.case_name;
    v.ok = mp.cycles == observed;
    auto lengths = [](const std::vector<std::set<point>>& cs) {
        CycleType ct;
        for (const auto& c : cs) ct.push_back(c.size());
        std::sort(ct.begin(), ct.end());
        return format_cycle_type(ct);
    };
    v.detail = "predicted " + lengths(mp.cycles) + "; observed " + lengths(observed);
    return v;
}

bool useful_persists(const JoinEvent& ev, std::string* detail) {
    auto after = w_cycles(*ev.result);
    std::set<std::size_t> good;
    for (const auto& u : useful_cycles(*ev.result, after)) good.insert(u.index);
    auto check = [&](const HurwitzMap& m, point offset) {
        for (const auto& u : useful_cycles(m)) {
            point p = u.x_witness + offset;
            if (!good.count(after.cycle_of[p])) {
                if (detail)
                    *detail = "useful cycle of length " + std::to_string(u.length) + " lost (witness " +
                              std::to_string(p) + ")";
                return false;
            }
        }
        return true;
    };
    if (!check(*ev.left, 0)) return false;
    if (ev.right && !check(*ev.right, static_cast<point>(ev.left->degree()))) return false;
    return true;
}

}  // namespace dhb
