#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

namespace forecaster {

// Knob value sets, ascending. 4 * 2 * 4 * 4 = 128 configurations.
inline constexpr std::array<int, 4> kBtbSizes{512, 1024, 2048, 4096};
inline constexpr std::array<int, 4> kL2SizesKb{256, 512, 768, 1024};
inline constexpr std::array<int, 4> kL3SizesMb{4, 8, 12, 16};
inline constexpr int kConfigCount = 128;

// Both L2 and L3 are 16-way; capacities map to exact enabled-way counts.
inline constexpr int kCacheWays = 16;

// BTB sections; B1 is always live.
inline constexpr std::array<int, 4> kBtbSectionEntries{512, 512, 1024, 2048};

struct HardwareConfig {
  int btb_entries = 4096;
  bool prefetcher_on = true;
  int l2_kb = 1024;
  int l3_mb = 16;

  bool operator==(const HardwareConfig&) const = default;
};

// Level index (0..3, or 0..1 for the prefetcher) of each knob.
// Throws std::invalid_argument naming the offending field.
int btb_level(int entries);
int l2_level(int kb);
int l3_level(int mb);

// index = ((btb_level * 2 + pf_level) * 4 + l2_level) * 4 + l3_level,
// pf_level 0 = on, 1 = off.
int encode(const HardwareConfig& config);
HardwareConfig decode(int index);  // throws std::out_of_range outside [0,127]

const std::vector<HardwareConfig>& enumerate_configs();

// Table values in bold: everything maxed, prefetcher on.
HardwareConfig max_config();

// enabled ways = round(16 * capacity / capacity_max); exact for all knob values
int l2_enabled_ways(const HardwareConfig& config);
int l3_enabled_ways(const HardwareConfig& config);

// Sum of normalized knob levels; used as the argmax tie-break key
// (cheapest configuration wins).
double config_footprint(const HardwareConfig& config);

// B1 is never gated and therefore not representable here.
enum class BtbSection { kB2 = 1, kB3 = 2, kB4 = 3 };

// Sections live at a given BTB size: 512 -> {}, 1024 -> {B2},
// 2048 -> {B2,B3}, 4096 -> {B2,B3,B4} (plus B1, always).
std::vector<BtbSection> btb_enabled_sections(int entries);

enum class PrefetcherToggle { kNone, kOnToOff, kOffToOn };

struct ReconfigDelta {
  std::vector<int> l2_ways_to_gate;    // descending, highest index first
  std::vector<int> l2_ways_to_ungate;  // ascending
  std::vector<int> l3_ways_to_gate;
  std::vector<int> l3_ways_to_ungate;
  std::vector<BtbSection> btb_sections_to_gate;
  std::vector<BtbSection> btb_sections_to_ungate;
  PrefetcherToggle prefetcher_toggle = PrefetcherToggle::kNone;

  bool empty() const;
};

// Transition plan from `from` to `to`. Ways are gated from the highest
// index downward so the enabled ways always form the prefix [0, k).
ReconfigDelta config_delta(const HardwareConfig& from, const HardwareConfig& to);

nlohmann::json config_to_json(const HardwareConfig& config);
HardwareConfig config_from_json(const nlohmann::json& j);

std::string config_to_string(const HardwareConfig& config);

}  // namespace forecaster
