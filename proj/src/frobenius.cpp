#include "dhb/frobenius.hpp"

#include "dhb/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

namespace dhb {

namespace {

bool parse_rational(const std::string& s, rational& out) {
    static const std::regex re(R"(([+-]?\d+)(?:/(\d+))?)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) return false;
    bigint num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    bigint den = m[2].matched ? bigint(m[2].str()) : bigint(1);
    if (den == 0) throw usage_error("zero denominator in '" + s + "'");
    out = rational(num, den);
    return true;
}

// One real part of a value: exact a/b or a decimal literal.
void parse_part(const std::string& s, bool& exact, rational& q, double& d) {
    if (parse_rational(s, q)) {
        d = q.convert_to<double>();
        return;
    }
    std::size_t used = 0;
    try {
        d = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw usage_error("bad character value '" + s + "'");
    exact = false;
    q = 0;
}

struct Complex {
    rational re, im;
};
Complex mul(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

double to_double(const bigint& v) { return v.convert_to<double>(); }

}  // namespace

CharValue parse_char_value(const std::string& token) {
    if (token.empty()) throw usage_error("empty character value");
    CharValue v;
    std::string re_s = token, im_s;
    if (token.back() == 'i') {
        std::string body = token.substr(0, token.size() - 1);
        // Split at the last sign that is not a leading sign or part of an exponent.
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;)
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        if (split == std::string::npos) {
            re_s = "0";
            im_s = body;
        } else {
            re_s = body.substr(0, split);
            im_s = body.substr(split);
        }
        if (im_s.empty() || im_s == "+" || im_s == "-") im_s += "1";
    }
    double dre = 0, dim = 0;
    parse_part(re_s, v.exact, v.re, dre);
    if (!im_s.empty()) parse_part(im_s, v.exact, v.im, dim);
    v.approx = {dre, dim};
    return v;
}

std::size_t CharacterTable::class_index(const std::string& name) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].name == name) return i;
    throw usage_error("unknown class '" + name + "' in table " + group);
}

double orthogonality_defect(const CharacterTable& t) {
    double g = to_double(t.order), worst = 0;
    for (std::size_t a = 0; a < t.characters.size(); ++a)
        for (std::size_t b = 0; b < t.characters.size(); ++b) {
            std::complex<double> s = 0;
            for (std::size_t c = 0; c < t.classes.size(); ++c)
                s += to_double(t.classes[c].size) * t.characters[a][c].approx * std::conj(t.characters[b][c].approx);
            worst = std::max(worst, std::abs(s - std::complex<double>(a == b ? g : 0.0)) / g);
        }
    return worst;
}

CharacterTable parse_table(const std::string& text) {
    CharacterTable t;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = false, have_order = false;
    auto fail = [&](const std::string& what) { throw usage_error("table line " + std::to_string(lineno) + ": " + what); };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (!header) {
            std::string ver;
            ls >> ver;
            if (key != "character-table" || ver != "1") fail("expected header 'character-table 1'");
            header = true;
            continue;
        }
        std::string rest;
        std::getline(ls, rest);
        std::istringstream rs(rest);
        if (key == "group") {
            rs >> t.group;
        } else if (key == "order") {
            std::string v;
            rs >> v;
            try {
                t.order = bigint(v);
            } catch (const std::exception&) {
                fail("bad order '" + v + "'");
            }
            have_order = true;
        } else if (key == "precision") {
            if (!(rs >> t.precision) || t.precision <= 0) fail("bad precision");
        } else if (key == "degree") {
            if (!(rs >> t.degree) || t.degree == 0) fail("bad degree");
        } else if (key == "generator") {
            if (t.degree == 0) fail("generator before degree");
            t.generators.push_back(parse_cycles(rest, t.degree));
        } else if (key == "class") {
            ClassInfo c;
            std::string size;
            if (!(rs >> c.name >> size >> c.order >> c.inverse)) fail("class needs name, size, order, inverse");
            try {
                c.size = bigint(size);
            } catch (const std::exception&) {
                fail("bad class size '" + size + "'");
            }
            std::string rep;
            std::getline(rs, rep);
            if (rep.find_first_not_of(" \t") != std::string::npos) {
                if (t.degree == 0) fail("class representative before degree");
                c.rep = parse_cycles(rep, t.degree);
                if (order(*c.rep) != c.order) fail("representative of " + c.name + " has the wrong order");
            }
            t.classes.push_back(std::move(c));
        } else if (key == "character") {
            std::vector<CharValue> row;
            std::string tok;
            while (rs >> tok) row.push_back(parse_char_value(tok));
            t.characters.push_back(std::move(row));
        } else {
            fail("unknown keyword '" + key + "'");
        }
    }
    if (!header) throw usage_error("empty character table");
    if (t.group.empty() || !have_order || t.classes.empty()) throw usage_error("table needs group, order and classes");
    if (t.characters.size() != t.classes.size())
        throw usage_error("table " + t.group + ": " + std::to_string(t.characters.size()) + " characters for " +
                          std::to_string(t.classes.size()) + " classes");
    bigint total = 0;
    std::size_t identities = 0;
    for (const auto& c : t.classes) {
        total += c.size;
        if (c.order == 1) ++identities;
        t.class_index(c.inverse);
        if (std::count_if(t.classes.begin(), t.classes.end(), [&](const ClassInfo& d) { return d.name == c.name; }) != 1)
            throw usage_error("class " + c.name + " listed twice");
    }
    if (total != t.order) throw usage_error("table " + t.group + ": class sizes do not sum to the group order");
    if (identities != 1) throw usage_error("table " + t.group + ": needs exactly one class of order 1");
    bool floats = false;
    for (const auto& row : t.characters) {
        if (row.size() != t.classes.size()) throw usage_error("table " + t.group + ": character row of wrong length");
        for (const auto& v : row) floats = floats || !v.exact;
    }
    if (floats && t.precision == 0) throw usage_error("table " + t.group + ": floating entries need a precision line");
    if (double d = orthogonality_defect(t); d > 1e-9)
        throw usage_error("table " + t.group + ": rows are not orthogonal (defect " + std::to_string(d) + ")");
    return t;
}

CharacterTable load_table(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw usage_error("cannot read table '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_table(ss.str());
}

std::vector<std::string> bundled_table_names() { return {"S3", "S4", "A4", "A5", "L2_13"}; }

CharacterTable bundled_table(const std::string& name) {
    return load_table(std::string(DHB_DATA_DIR) + "/tables/" + name + ".tbl");
}

bigint frobenius_count(const CharacterTable& t, const std::string& X, const std::string& Y, const std::string& Z) {
    std::size_t ix = t.class_index(X), iy = t.class_index(Y), iz = t.class_index(Z);
    std::size_t e = 0;
    while (t.classes[e].order != 1) ++e;
    const bigint scale_num = t.classes[ix].size * t.classes[iy].size * t.classes[iz].size;

    bool exact = true;
    for (const auto& row : t.characters)
        for (std::size_t c : {ix, iy, iz, e}) exact = exact && row[c].exact;

    if (exact) {
        Complex sum{0, 0};
        for (const auto& row : t.characters) {
            Complex p = mul(mul({row[ix].re, row[ix].im}, {row[iy].re, row[iy].im}), {row[iz].re, row[iz].im});
            if (row[e].im != 0 || row[e].re <= 0) throw usage_error("character degree must be a positive integer");
            sum.re += p.re / row[e].re;
            sum.im += p.im / row[e].re;
        }
        rational v = rational(scale_num, t.order) * sum.re;
        if (sum.im != 0 || boost::multiprecision::denominator(v) != 1)
            throw check_error("character formula gives a non-integer for (" + X + "," + Y + "," + Z + ")");
        if (v < 0) throw check_error("character formula gives a negative count");
        return boost::multiprecision::numerator(v);
    }

    std::complex<double> sum = 0;
    for (const auto& row : t.characters) sum += row[ix].approx * row[iy].approx * row[iz].approx / row[e].approx;
    std::complex<double> v = to_double(scale_num) / to_double(t.order) * sum;
    double r = std::round(v.real());
    if (std::abs(v.imag()) > 1e-6 || std::abs(v.real() - r) > 1e-6)
        throw check_error("character formula gives a non-integer for (" + X + "," + Y + "," + Z + ")");
    if (r < 0) throw check_error("character formula gives a negative count");
    return bigint(r);
}

rational class_sum_coefficient(const CharacterTable& t, const std::string& X, const std::string& Y,
                               const std::string& Z) {
    const ClassInfo& z = t.classes[t.class_index(Z)];
    return rational(frobenius_count(t, X, Y, z.inverse), z.size);
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(const std::vector<Perm>& gens, std::size_t cap) {
    if (gens.empty()) throw usage_error("FiniteGroup needs at least one generator");
    Perm id(gens[0].degree());
    elements_.push_back(id);
    index_.emplace(id, 0);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (const auto& s : gens) {
            if (s.degree() != id.degree()) throw usage_error("generators of different degree");
            Perm h = compose(elements_[i], s);
            if (index_.count(h)) continue;
            if (elements_.size() >= cap)
                throw usage_error("group order exceeds the enumeration cap " + std::to_string(cap));
            index_.emplace(h, elements_.size());
            elements_.push_back(std::move(h));
        }
}

const std::set<Perm>& FiniteGroup::conjugacy_class(const Perm& g) {
    if (!contains(g)) throw usage_error("representative " + to_cycles(g) + " is not in the group");
    if (auto it = class_of_.find(g); it != class_of_.end()) return classes_[it->second];
    std::set<Perm> cl;
    for (const auto& c : elements_) cl.insert(compose(compose(inverse(c), g), c));
    for (const auto& h : cl) class_of_.emplace(h, classes_.size());
    classes_.push_back(std::move(cl));
    return classes_.back();
}

bigint FiniteGroup::count(const Perm& X, const Perm& Y, const Perm& Z) {
    const auto& xs = conjugacy_class(X);
    const auto& ys = conjugacy_class(Y);
    const auto& zs = conjugacy_class(Z);
    bigint n = 0;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (zs.count(inverse(compose(x, y)))) ++n;
    return n;
}

bigint brute_count(const std::vector<Perm>& gens, const Perm& X, const Perm& Y, const Perm& Z, std::size_t cap) {
    FiniteGroup g(gens, cap);
    return g.count(X, Y, Z);
}

}  // namespace dhb
