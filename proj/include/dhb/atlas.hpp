#pragma once

#include "dhb/map.hpp"

#include <array>
#include <string>
#include <vector>

namespace dhb {

enum class BasicMapId { A, B, C, D, E, F, G, H, I, J, K, L, M, N };

inline constexpr std::array<BasicMapId, 14> all_basic_maps = {
    BasicMapId::A, BasicMapId::B, BasicMapId::C, BasicMapId::D, BasicMapId::E, BasicMapId::F, BasicMapId::G,
    BasicMapId::H, BasicMapId::I, BasicMapId::J, BasicMapId::K, BasicMapId::L, BasicMapId::M, BasicMapId::N};

char letter(BasicMapId id);
BasicMapId basic_map_id(char c);  // throws usage_error outside 'A'..'N'

const HurwitzMap& basic_map(BasicMapId id);

// Published reference data, kept independent of the permutations.
struct ReferenceRow {
    std::size_t degree;
    int t_parity;
    FixedPointVector fixed_points;
    std::array<std::size_t, 3> handles;  // counts for k = 1, 2, 3
    CycleType w_cycles;
    CycleType useful_lengths;
};

const ReferenceRow& reference_row(BasicMapId id);

struct FieldCheck {
    std::string field;
    std::string expected, observed;
    bool ok;
};

struct AtlasEntryReport {
    BasicMapId id;
    std::vector<FieldCheck> fields;
    bool ok() const;
};

struct AtlasReport {
    std::vector<AtlasEntryReport> entries;
    bool ok() const;
    // Only the named field across all maps.
    bool field_ok(const std::string& field) const;
};

// Recomputes every reference column from the permutations and compares.
// Also checks genus 0 for each map and |<x,y>| = 1092 for map A.
AtlasReport validate_atlas();

}  // namespace dhb
