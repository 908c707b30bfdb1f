#include "dhb/map.hpp"

#include "dhb/error.hpp"

#include <algorithm>
#include <sstream>

namespace dhb {

FixedPointVector operator+(FixedPointVector u, const FixedPointVector& v) {
    u.alpha += v.alpha;
    u.beta += v.beta;
    u.gamma += v.gamma;
    return u;
}

FixedPointVector operator-(FixedPointVector u, const FixedPointVector& v) {
    u.alpha -= v.alpha;
    u.beta -= v.beta;
    u.gamma -= v.gamma;
    return u;
}

std::string to_string(const FixedPointVector& v) {
    return "(" + std::to_string(v.alpha) + "," + std::to_string(v.beta) + "," + std::to_string(v.gamma) + ")";
}

namespace {

void require(bool ok, const char* relation) {
    if (!ok) throw check_error(std::string("relation fails: ") + relation);
}

}  // namespace

HurwitzMap::HurwitzMap(Perm x, Perm y, Perm t) : x_(std::move(x)), y_(std::move(y)), t_(std::move(t)) {
    std::size_t n = x_.degree();
    if (y_.degree() != n || t_.degree() != n) throw usage_error("x, y, t have different degrees");
    Perm xy = compose(x_, y_);
    require(compose(x_, x_).is_identity(), "x^2 = 1");
    require(power(y_, 3).is_identity(), "y^3 = 1");
    require(power(xy, 7).is_identity(), "(xy)^7 = 1");
    require(compose(t_, t_).is_identity(), "t^2 = 1");
    Perm xt = compose(x_, t_), yt = compose(y_, t_);
    require(compose(xt, xt).is_identity(), "(xt)^2 = 1");
    require(compose(yt, yt).is_identity(), "(yt)^2 = 1");
    if (!is_transitive({x_, y_}, n)) throw check_error("<x, y> is not transitive");
}

HurwitzMap new_map(std::size_t n, Perm x, Perm y, Perm t) {
    if (x.degree() != n) throw usage_error("declared degree " + std::to_string(n) + " but x has degree " +
                                           std::to_string(x.degree()));
    return HurwitzMap(std::move(x), std::move(y), std::move(t));
}

FixedPointVector fixed_point_vector(const HurwitzMap& m) {
    return {static_cast<long>(num_fixed(m.x())), static_cast<long>(num_fixed(m.y())),
            static_cast<long>(num_fixed(m.z()))};
}

long genus_of(std::size_t n, const FixedPointVector& v) {
    long num = static_cast<long>(n) - 21 * v.alpha - 28 * v.beta - 36 * v.gamma;
    if (num % 84 != 0) throw check_error("non-integral genus for n = " + std::to_string(n) + ", v = " + to_string(v));
    long g = 1 + num / 84;
    if (g < 0) throw check_error("negative genus for n = " + std::to_string(n) + ", v = " + to_string(v));
    return g;
}

long genus(const HurwitzMap& m) { return genus_of(m.degree(), fixed_point_vector(m)); }

Signature signature(const HurwitzMap& m) {
    auto v = fixed_point_vector(m);
    return {genus_of(m.degree(), v), v};
}

std::vector<Handle> find_handles(const HurwitzMap& m, int k) {
    if (k < 1 || k > 3) throw usage_error("handle kind must be 1, 2 or 3");
    Perm step = power(compose(m.x(), m.y()), k);
    const Perm& x = m.x();
    std::vector<Handle> out;
    for (point a = 0; a < m.degree(); ++a) {
        point b = step[a];
        if (a == b || x[a] != a || x[b] != b) continue;
        // An unordered pair is listed once. If both orientations qualify, keep a < b.
        if (step[b] == a && b < a) continue;
        out.push_back({k, a, b, m.t()[a] == b});
    }
    std::sort(out.begin(), out.end(), [](const Handle& h, const Handle& g) {
        return std::pair(std::min(h.a, h.b), std::max(h.a, h.b)) < std::pair(std::min(g.a, g.b), std::max(g.a, g.b));
    });
    return out;
}

std::vector<Handle> all_handles(const HurwitzMap& m) {
    std::vector<Handle> out;
    for (int k = 1; k <= 3; ++k)
        for (const auto& h : find_handles(m, k)) out.push_back(h);
    return out;
}

std::set<point> handle_points(const HurwitzMap& m) {
    std::set<point> s;
    for (const auto& h : all_handles(m)) {
        s.insert(h.a);
        s.insert(h.b);
    }
    return s;
}

CycleType WCycles::type() const {
    CycleType ct;
    for (const auto& c : cycles) ct.push_back(c.size());
    std::sort(ct.begin(), ct.end());
    return ct;
}

WCycles w_cycles(const HurwitzMap& m) {
    WCycles wc;
    wc.cycles = cycles(m.w());
    wc.cycle_of.resize(m.degree());
    for (std::size_t i = 0; i < wc.cycles.size(); ++i)
        for (point a : wc.cycles[i]) wc.cycle_of[a] = i;
    return wc;
}

std::vector<UsefulCycle> useful_cycles(const HurwitzMap& m) { return useful_cycles(m, w_cycles(m)); }

std::vector<UsefulCycle> useful_cycles(const HurwitzMap& m, const WCycles& wc) {
    auto hp = handle_points(m);
    const Perm& x = m.x();
    const Perm& y = m.y();
    std::vector<UsefulCycle> out;
    for (std::size_t i = 0; i < wc.cycles.size(); ++i) {
        const auto& c = wc.cycles[i];
        const point none = static_cast<point>(m.degree());
        point xw = none, yw = none;
        for (point p : c) {
            if (xw == none && wc.cycle_of[x[p]] == i && !(x[p] == p && hp.count(p))) xw = p;
            if (yw == none && wc.cycle_of[y[p]] == i) yw = p;
        }
        if (xw != none && yw != none) out.push_back({i, c.size(), xw, yw});
    }
    return out;
}

bool is_prime(unsigned long long v) {
    if (v < 2) return false;
    for (unsigned long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::set<unsigned> prime_divisors(std::size_t v) {
    std::set<unsigned> s;
    for (unsigned d = 2; static_cast<std::size_t>(d) * d <= v; ++d)
        while (v % d == 0) {
            s.insert(d);
            v /= d;
        }
    if (v > 1) s.insert(static_cast<unsigned>(v));
    return s;
}

std::set<unsigned> prime_set(const HurwitzMap& m) {
    std::set<unsigned> s;
    for (std::size_t len : cycle_type(m.w()))
        for (unsigned p : prime_divisors(len)) s.insert(p);
    return s;
}

long tau(const HurwitzMap& m, const Perm& g) {
    if (g.degree() != m.degree()) throw usage_error("tau: degree mismatch");
    if (!compose(g, g).is_identity()) throw usage_error("tau: not an involution");
    return static_cast<long>(m.degree() - num_fixed(g)) / 2;
}

std::string write_map(const HurwitzMap& m) {
    std::ostringstream os;
    os << "hurwitz-map 1\n"
       << "degree " << m.degree() << "\n"
       << "x " << to_cycles(m.x()) << "\n"
       << "y " << to_cycles(m.y()) << "\n"
       << "t " << to_cycles(m.t()) << "\n";
    return os.str();
}

HurwitzMap read_map(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t n = 0, offset = 0;
    bool header = false;
    std::string gens[3];
    bool have[3] = {false, false, false};
    while (std::getline(is, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_first_of(" \t", b);
        std::string key = line.substr(b, e == std::string::npos ? std::string::npos : e - b);
        std::string rest = e == std::string::npos ? "" : line.substr(e + 1);
        if (!header) {
            if (key != "hurwitz-map") throw parse_error("expected 'hurwitz-map 1' header", line_start + b);
            if (rest.find_first_not_of(" \t\r") == std::string::npos ||
                std::stoi(rest) != 1)
                throw parse_error("unsupported map format version", line_start + b);
            header = true;
        } else if (key == "degree") {
            n = std::stoul(rest);
        } else if (key == "x" || key == "y" || key == "t") {
            int i = key == "x" ? 0 : key == "y" ? 1 : 2;
            gens[i] = rest;
            have[i] = true;
        } else {
            throw parse_error("unknown key '" + key + "'", line_start + b);
        }
    }
    if (!header || n == 0 || !have[0] || !have[1] || !have[2])
        throw parse_error("map needs header, degree, x, y and t", offset);
    return new_map(n, parse_cycles(gens[0], n), parse_cycles(gens[1], n), parse_cycles(gens[2], n));
}

}  // namespace dhb
