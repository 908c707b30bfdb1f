#include "dhb/atlas.hpp"

#include "atlas_data.hpp"
#include "dhb/error.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace dhb {

char letter(BasicMapId id) { return static_cast<char>('A' + static_cast<int>(id)); }

BasicMapId basic_map_id(char c) {
    if (c < 'A' || c > 'N') throw usage_error(std::string("no basic map named '") + c + "'");
    return static_cast<BasicMapId>(c - 'A');
}

const HurwitzMap& basic_map(BasicMapId id) {
    static std::once_flag once;
    static std::vector<HurwitzMap> maps;
    std::call_once(once, [] {
        for (const auto& raw : detail::raw_maps)
            maps.push_back(new_map(raw.degree, parse_cycles(raw.x, raw.degree), parse_cycles(raw.y, raw.degree),
                                   parse_cycles(raw.t, raw.degree)));
    });
    return maps[static_cast<std::size_t>(id)];
}

const ReferenceRow& reference_row(BasicMapId id) {
    static const ReferenceRow rows[14] = {
        {14, +1, {2, 2, 0}, {1, 0, 0}, {1, 13}, {}},
        {15, +1, {3, 0, 1}, {0, 2, 1}, {3, 5, 7}, {5}},
        {21, -1, {5, 0, 0}, {1, 0, 1}, {1, 4, 8, 8}, {4, 8}},
        {22, -1, {2, 1, 1}, {0, 1, 0}, {5, 6, 11}, {}},
        {28, +1, {4, 1, 0}, {1, 1, 0}, {1, 9, 9, 9}, {}},
        {30, +1, {2, 0, 2}, {0, 1, 0}, {15, 15}, {}},
        {42, +1, {6, 0, 0}, {3, 0, 0}, {1, 1, 1, 13, 13, 13}, {}},
        {42, -1, {6, 0, 0}, {1, 0, 1}, {1, 3, 10, 11, 17}, {17}},
        {57, -1, {5, 0, 1}, {0, 2, 0}, {4, 7, 8, 10, 13, 15}, {}},
        {72, -1, {4, 0, 2}, {2, 0, 0}, {1, 1, 10, 11, 11, 16, 22}, {}},
        {72, +1, {4, 0, 2}, {1, 0, 0}, {1, 5, 17, 49}, {17}},
        {102, -1, {2, 0, 4}, {0, 1, 0}, {21, 23, 58}, {}},
        {108, +1, {4, 0, 3}, {1, 1, 0}, {1, 12, 14, 19, 26, 36}, {}},
        {108, +1, {4, 0, 3}, {1, 0, 1}, {1, 9, 18, 20, 21, 39}, {}},
    };
    return rows[static_cast<std::size_t>(id)];
}

bool AtlasEntryReport::ok() const {
    return std::all_of(fields.begin(), fields.end(), [](const FieldCheck& f) { return f.ok; });
}

bool AtlasReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const AtlasEntryReport& e) { return e.ok(); });
}

bool AtlasReport::field_ok(const std::string& field) const {
    for (const auto& e : entries)
        for (const auto& f : e.fields)
            if (f.field == field && !f.ok) return false;
    return true;
}

namespace {

std::string str(const CycleType& ct) { return ct.empty() ? "-" : format_cycle_type(ct); }

std::string str(const std::array<std::size_t, 3>& h) {
    return std::to_string(h[0]) + "," + std::to_string(h[1]) + "," + std::to_string(h[2]);
}

template <class T>
FieldCheck field(const std::string& name, const T& expected, const T& observed, std::string e, std::string o) {
    return {name, std::move(e), std::move(o), expected == observed};
}

}  // namespace

AtlasReport validate_atlas() {
    AtlasReport rep;
    for (BasicMapId id : all_basic_maps) {
        const HurwitzMap& m = basic_map(id);
        const ReferenceRow& row = reference_row(id);
        AtlasEntryReport e{id, {}};

        e.fields.push_back(field("degree", row.degree, m.degree(), std::to_string(row.degree),
                                 std::to_string(m.degree())));
        int par = parity(m.t());
        e.fields.push_back(field("t_parity", row.t_parity, par, row.t_parity > 0 ? "+" : "-", par > 0 ? "+" : "-"));
        auto v = fixed_point_vector(m);
        e.fields.push_back(field("fixed_points", row.fixed_points, v, to_string(row.fixed_points), to_string(v)));
        std::array<std::size_t, 3> hc{};
        for (int k = 1; k <= 3; ++k) hc[k - 1] = find_handles(m, k).size();
        e.fields.push_back(field("handles", row.handles, hc, str(row.handles), str(hc)));
        auto wc = w_cycles(m);
        auto wt = wc.type();
        e.fields.push_back(field("w_cycles", row.w_cycles, wt, str(row.w_cycles), str(wt)));
        CycleType useful;
        for (const auto& u : useful_cycles(m, wc)) useful.push_back(u.length);
        std::sort(useful.begin(), useful.end());
        e.fields.push_back(field("useful", row.useful_lengths, useful, str(row.useful_lengths), str(useful)));

        long g = genus(m);
        e.fields.push_back(field("genus", 0L, g, "0", std::to_string(g)));
        if (id == BasicMapId::A) {
            bigint ord = group_order({m.x(), m.y()});
            e.fields.push_back(field("group_order", bigint(1092), ord, "1092", ord.str()));
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace dhb
