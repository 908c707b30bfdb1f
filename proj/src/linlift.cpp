#include "dhb/linlift.hpp"

#include "dhb/error.hpp"

#include <algorithm>
#include <map>

namespace dhb {

namespace {

residue mulmod(residue a, residue b, unsigned p) { return static_cast<residue>(std::uint64_t{a} * b % p); }

residue powmod(residue a, std::uint64_t e, unsigned p) {
    residue r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

residue invmod(residue a, unsigned p) { return powmod(a, p - 2, p); }

// Sum of scaled sparse rows, reduced; rows are sorted by column.
SparseMatrix::Row axpy(const SparseMatrix::Row& x, residue c, const SparseMatrix::Row& y, unsigned p) {
    SparseMatrix::Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            residue v = mulmod(c, y[j].second, p);
            if (v) out.emplace_back(y[j].first, v);
            ++j;
        } else {
            residue v = static_cast<residue>((x[i].second + mulmod(c, y[j].second, p)) % p);
            if (v) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Echelon reduction that keeps pivot rows keyed by their leading column.
struct Echelon {
    unsigned p;
    std::map<std::uint32_t, SparseMatrix::Row> pivots;

    // Reduces r against the pivots; returns the leading column, or -1 if r vanished.
    long insert(SparseMatrix::Row r) {
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                std::uint32_t lead = r.front().first;
                pivots.emplace(lead, std::move(r));
                return lead;
            }
            const auto& pr = it->second;
            residue c = mulmod(p - r.front().second, invmod(pr.front().second, p), p);
            r = axpy(r, c, pr, p);
        }
        return -1;
    }
};

}  // namespace

SparseMatrix::SparseMatrix(unsigned p, std::size_t n) : p_(p), rows_(n) {
    if (!is_prime(p)) throw usage_error("modulus " + std::to_string(p) + " is not prime");
}

SparseMatrix SparseMatrix::identity(unsigned p, std::size_t n) {
    SparseMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i] = {{static_cast<std::uint32_t>(i), 1 % p}};
    return m;
}

SparseMatrix SparseMatrix::permutation(unsigned p, const Perm& g) {
    SparseMatrix m(p, g.degree());
    for (point i = 0; i < g.degree(); ++i) m.rows_[i] = {{g[i], 1 % p}};
    return m;
}

void SparseMatrix::set_row(std::size_t i, Row r) {
    for (auto& [c, v] : r) {
        if (c >= size()) throw usage_error("column out of range");
        v %= p_;
    }
    std::sort(r.begin(), r.end());
    Row out;
    for (const auto& [c, v] : r) {
        if (!out.empty() && out.back().first == c)
            out.back().second = (out.back().second + v) % p_;
        else
            out.emplace_back(c, v);
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    rows_.at(i) = std::move(out);
}

residue SparseMatrix::at(std::size_t i, std::size_t j) const {
    for (const auto& [c, v] : rows_.at(i))
        if (c == j) return v;
    return 0;
}

bool SparseMatrix::is_identity() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != 1 || rows_[i][0].first != i || rows_[i][0].second != 1) return false;
    return true;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.size() != b.size() || a.modulus() != b.modulus()) throw usage_error("matrix shapes or moduli differ");
    SparseMatrix out(a.modulus(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        SparseMatrix::Row acc;
        for (const auto& [k, v] : a.row(i)) acc = axpy(acc, v, b.row(k), a.modulus());
        out.set_row(i, std::move(acc));
    }
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.size() != b.size() || a.modulus() != b.modulus()) throw usage_error("matrix shapes or moduli differ");
    SparseMatrix out(a.modulus(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.set_row(i, axpy(a.row(i), a.modulus() - 1, b.row(i), a.modulus()));
    return out;
}

SparseMatrix power(const SparseMatrix& m, unsigned k) {
    SparseMatrix r = SparseMatrix::identity(m.modulus(), m.size()), base = m;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::size_t rank(const SparseMatrix& m) {
    Echelon e{m.modulus(), {}};
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (e.insert(m.row(i)) >= 0) ++r;
    return r;
}

residue determinant(const SparseMatrix& m) {
    unsigned p = m.modulus();
    Echelon e{p, {}};
    std::vector<std::uint32_t> lead(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        long c = e.insert(m.row(i));
        if (c < 0) return 0;
        lead[i] = static_cast<std::uint32_t>(c);
    }
    // Adding multiples of earlier rows leaves the determinant alone, so it is the
    // product of the pivots times the sign of row -> leading column.
    residue d = 1;
    for (std::size_t i = 0; i < m.size(); ++i) d = mulmod(d, e.pivots.at(lead[i]).front().second, p);
    std::vector<point> img(lead.begin(), lead.end());
    if (parity(Perm(std::move(img))) < 0) d = (p - d) % p;
    return d;
}

std::size_t fixed_space_dim(const SparseMatrix& m) {
    return m.size() - rank(m - SparseMatrix::identity(m.modulus(), m.size()));
}

// ---------------------------------------------------------------------------

DenseMatrix to_dense(const SparseMatrix& m) {
    DenseMatrix d{m.modulus(), m.size(), std::vector<residue>(m.size() * m.size(), 0)};
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& [c, v] : m.row(i)) d(i, c) = v;
    return d;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix r{a.p, a.n, std::vector<residue>(a.n * a.n, 0)};
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k)
            if (a(i, k))
                for (std::size_t j = 0; j < a.n; ++j) r(i, j) = (r(i, j) + mulmod(a(i, k), b(k, j), a.p)) % a.p;
    return r;
}

namespace {

// Gaussian elimination in place; returns rank and accumulates the determinant.
std::size_t eliminate(DenseMatrix& m, residue& det) {
    unsigned p = m.p;
    std::size_t r = 0;
    det = 1 % p;
    for (std::size_t c = 0; c < m.n && r < m.n; ++c) {
        std::size_t piv = r;
        while (piv < m.n && m(piv, c) == 0) ++piv;
        if (piv == m.n) {
            det = 0;
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < m.n; ++j) std::swap(m(piv, j), m(r, j));
            det = (p - det) % p;
        }
        det = mulmod(det, m(r, c), p);
        residue inv = invmod(m(r, c), p);
        for (std::size_t i = r + 1; i < m.n; ++i) {
            if (!m(i, c)) continue;
            residue f = mulmod(m(i, c), inv, p);
            for (std::size_t j = c; j < m.n; ++j) m(i, j) = (m(i, j) + p - mulmod(f, m(r, j), p)) % p;
        }
        ++r;
    }
    if (r < m.n) det = 0;
    return r;
}

}  // namespace

std::size_t dense_rank(DenseMatrix m) {
    residue d;
    return eliminate(m, d);
}

residue dense_determinant(DenseMatrix m) {
    residue d;
    eliminate(m, d);
    return d;
}

bool is_primitive_root(residue t, unsigned p) {
    if (!is_prime(p)) throw usage_error(std::to_string(p) + " is not prime");
    t %= p;
    if (t == 0) return false;
    if (p == 2) return true;
    for (unsigned q : prime_divisors(p - 1))
        if (powmod(t, (p - 1) / q, p) == 1) return false;
    return true;
}

residue least_primitive_root(unsigned p) {
    for (residue t = 1; t < p; ++t)
        if (is_primitive_root(t, p)) return t;
    throw usage_error("no primitive root");
}

// ---------------------------------------------------------------------------

namespace {

void require(bool ok, const std::string& relation) {
    if (!ok) throw check_error("linear lift: relation " + relation + " fails");
}

LinearTriple finish(LinearTriple t) {
    SparseMatrix xy = t.x * t.y;
    t.z = power(xy, 6);
    require((t.x * t.x).is_identity(), "x^2 = 1");
    require(power(t.y, 3).is_identity(), "y^3 = 1");
    require((t.z * xy).is_identity(), "(xy)^7 = 1");
    t.det_x = determinant(t.x);
    t.det_y = determinant(t.y);
    t.det_z = determinant(t.z);
    require(t.det_x == 1 && t.det_y == 1 && t.det_z == 1, "det = 1");
    return t;
}

}  // namespace

LinearTriple build_linear_triple(const HurwitzMap& m, const LiftPoints& pts, unsigned p, residue t1) {
    if (!is_primitive_root(t1, p))
        throw usage_error("t1 = " + std::to_string(t1) + " does not generate the multiplicative group mod " +
                          std::to_string(p));
    const Perm& xi = m.x();
    std::size_t n = m.degree();
    for (point q : {pts.a, pts.b, pts.a2, pts.b2})
        if (q >= n || xi[q] != q) throw usage_error("designated lift points must be fixed by x");
    if (std::set<point>{pts.a, pts.b, pts.a2, pts.b2}.size() != 4) throw usage_error("designated lift points repeat");

    LinearTriple t{p, t1 % p, pts, xi, m.y(), SparseMatrix::identity(p, n), SparseMatrix(p, n), SparseMatrix::permutation(p, m.y()),
                   SparseMatrix(p, n)};
    t.xprime.set_row(pts.a, {{pts.a, p - 1}, {pts.a2, t.t1}});
    t.xprime.set_row(pts.b, {{pts.b, p - 1}, {pts.b2, t.t1}});
    SparseMatrix xim = SparseMatrix::permutation(p, xi);
    require((t.xprime * t.xprime).is_identity(), "x'^2 = 1");
    require(t.xprime * xim == xim * t.xprime, "x' xi = xi x'");
    t.x = t.xprime * xim;
    return finish(std::move(t));
}

LinearTriple permutation_triple(const HurwitzMap& m, unsigned p) {
    std::size_t n = m.degree();
    LinearTriple t{p, 1 % p, {}, m.x(), m.y(), SparseMatrix::identity(p, n), SparseMatrix::permutation(p, m.x()),
                   SparseMatrix::permutation(p, m.y()), SparseMatrix(p, n)};
    return finish(std::move(t));
}

DimsEvidence beauville_dims(const LinearTriple& t1, const LinearTriple& t2) {
    if (t1.p != t2.p || t1.x.size() != t2.x.size()) throw usage_error("triples over different fields or sizes");
    DimsEvidence ev;
    auto add = [&](const char* pos, const SparseMatrix& m1, const SparseMatrix& m2) {
        PositionDims d{pos, fixed_space_dim(m1), fixed_space_dim(m2), false};
        d.ok = d.dim1 != d.dim2;
        if (!d.ok)
            ev.failures.push_back(std::string("position ") + pos + ": both fixed spaces have dimension " +
                                  std::to_string(d.dim1));
        ev.positions.push_back(d);
    };
    add("x", t1.x, t2.x);
    add("y", t1.y, t2.y);
    add("z", t1.z, t2.z);
    ev.xi_cycles1 = num_cycles(t1.xi);
    ev.xi_cycles2 = num_cycles(t2.xi);
    ev.xiy_cycles1 = num_cycles(compose(t1.xi, t1.yperm));
    ev.xiy_cycles2 = num_cycles(compose(t2.xi, t2.yperm));
    return ev;
}

LiftSource lift_source(const Assembly& w) {
    Handle h = free_stock_handles(w) > 0 ? stock_handle(w) : attach_handle(w);
    Assembly g = Assembly::leaf(BasicMapId::G, "lift");
    Assembly joined = join(w, h, g, free_handles(g, 1, std::size_t{0}).front());
    auto hs = free_handles(joined, 1, joined.parts.size() - 1);
    if (hs.size() < 2) throw check_error("the attached G has fewer than two free (1)-handles");
    // Both handles are oriented with b = a (xy).
    return {std::move(joined), {hs[0].a, hs[0].b, hs[1].a, hs[1].b}};
}

LiftReport lift_pair(const Plan& plan, unsigned p, residue t1) {
    MapPair pair = build_pair(plan);
    LiftSource s1 = lift_source(pair.w1), s2 = lift_source(pair.w2);
    LinearTriple a = build_linear_triple(s1.map.map, s1.points, p, t1);
    LinearTriple b = build_linear_triple(s2.map.map, s2.points, p, t1);
    DimsEvidence d = beauville_dims(a, b);
    return LiftReport{plan, p, t1 % p, s1.map.degree(), std::move(a), std::move(b), std::move(d)};
}

}  // namespace dhb
