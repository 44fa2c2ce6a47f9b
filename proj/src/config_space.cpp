#include "forecaster/config_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace forecaster {

namespace {

template <std::size_t N>
int level_of(const std::array<int, N>& values, int v, const char* field) {
  for (std::size_t i = 0; i < N; ++i) {
    if (values[i] == v) return static_cast<int>(i);
  }
  throw std::invalid_argument(std::string(field) + ": invalid value " + std::to_string(v));
}

}  // namespace

int btb_level(int entries) { return level_of(kBtbSizes, entries, "btb_entries"); }
int l2_level(int kb) { return level_of(kL2SizesKb, kb, "l2_kb"); }
int l3_level(int mb) { return level_of(kL3SizesMb, mb, "l3_mb"); }

int encode(const HardwareConfig& config) {
  int pf = config.prefetcher_on ? 0 : 1;
  return ((btb_level(config.btb_entries) * 2 + pf) * 4 + l2_level(config.l2_kb)) * 4 +
         l3_level(config.l3_mb);
}

HardwareConfig decode(int index) {
  if (index < 0 || index >= kConfigCount) {
    throw std::out_of_range("config index " + std::to_string(index) + " outside [0,127]");
  }
  HardwareConfig c;
  c.l3_mb = kL3SizesMb[index % 4];
  index /= 4;
  c.l2_kb = kL2SizesKb[index % 4];
  index /= 4;
  c.prefetcher_on = (index % 2) == 0;
  index /= 2;
  c.btb_entries = kBtbSizes[index];
  return c;
}

const std::vector<HardwareConfig>& enumerate_configs() {
  static const std::vector<HardwareConfig> configs = [] {
    std::vector<HardwareConfig> v;
    v.reserve(kConfigCount);
    for (int i = 0; i < kConfigCount; ++i) v.push_back(decode(i));
    return v;
  }();
  return configs;
}

HardwareConfig max_config() { return HardwareConfig{4096, true, 1024, 16}; }

int l2_enabled_ways(const HardwareConfig& config) {
  return static_cast<int>(std::lround(kCacheWays * static_cast<double>(config.l2_kb) /
                                      kL2SizesKb.back()));
}

int l3_enabled_ways(const HardwareConfig& config) {
  return static_cast<int>(std::lround(kCacheWays * static_cast<double>(config.l3_mb) /
                                      kL3SizesMb.back()));
}

double config_footprint(const HardwareConfig& config) {
  return btb_level(config.btb_entries) / 3.0 + (config.prefetcher_on ? 1.0 : 0.0) +
         l2_level(config.l2_kb) / 3.0 + l3_level(config.l3_mb) / 3.0;
}

std::vector<BtbSection> btb_enabled_sections(int entries) {
  std::vector<BtbSection> out;
  switch (btb_level(entries)) {
    case 3: out = {BtbSection::kB2, BtbSection::kB3, BtbSection::kB4}; break;
    case 2: out = {BtbSection::kB2, BtbSection::kB3}; break;
    case 1: out = {BtbSection::kB2}; break;
    default: break;
  }
  return out;
}

bool ReconfigDelta::empty() const {
  return l2_ways_to_gate.empty() && l2_ways_to_ungate.empty() && l3_ways_to_gate.empty() &&
         l3_ways_to_ungate.empty() && btb_sections_to_gate.empty() &&
         btb_sections_to_ungate.empty() && prefetcher_toggle == PrefetcherToggle::kNone;
}

namespace {

void way_delta(int old_ways, int new_ways, std::vector<int>* gate, std::vector<int>* ungate) {
  if (new_ways < old_ways) {
    for (int w = old_ways - 1; w >= new_ways; --w) gate->push_back(w);
  } else {
    for (int w = old_ways; w < new_ways; ++w) ungate->push_back(w);
  }
}

}  // namespace

ReconfigDelta config_delta(const HardwareConfig& from, const HardwareConfig& to) {
  encode(from);  // validate both
  encode(to);

  ReconfigDelta d;
  way_delta(l2_enabled_ways(from), l2_enabled_ways(to), &d.l2_ways_to_gate, &d.l2_ways_to_ungate);
  way_delta(l3_enabled_ways(from), l3_enabled_ways(to), &d.l3_ways_to_gate, &d.l3_ways_to_ungate);

  auto old_sections = btb_enabled_sections(from.btb_entries);
  auto new_sections = btb_enabled_sections(to.btb_entries);
  for (BtbSection s : old_sections) {
    if (std::find(new_sections.begin(), new_sections.end(), s) == new_sections.end()) {
      d.btb_sections_to_gate.push_back(s);
    }
  }
  for (BtbSection s : new_sections) {
    if (std::find(old_sections.begin(), old_sections.end(), s) == old_sections.end()) {
      d.btb_sections_to_ungate.push_back(s);
    }
  }

  if (from.prefetcher_on != to.prefetcher_on) {
    d.prefetcher_toggle =
        from.prefetcher_on ? PrefetcherToggle::kOnToOff : PrefetcherToggle::kOffToOn;
  }
  return d;
}

nlohmann::json config_to_json(const HardwareConfig& config) {
  return nlohmann::json{{"btb_entries", config.btb_entries},
                        {"prefetcher_on", config.prefetcher_on},
                        {"l2_kb", config.l2_kb},
                        {"l3_mb", config.l3_mb},
                        {"index", encode(config)}};
}

HardwareConfig config_from_json(const nlohmann::json& j) {
  HardwareConfig c;
  c.btb_entries = j.at("btb_entries").get<int>();
  c.prefetcher_on = j.at("prefetcher_on").get<bool>();
  c.l2_kb = j.at("l2_kb").get<int>();
  c.l3_mb = j.at("l3_mb").get<int>();
  int idx = encode(c);
  if (j.contains("index") && j.at("index").get<int>() != idx) {
    throw std::invalid_argument("config index field disagrees with knob values");
  }
  return c;
}

std::string config_to_string(const HardwareConfig& config) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "btb=%d pf=%s l2=%dK l3=%dM", config.btb_entries,
                config.prefetcher_on ? "on" : "off", config.l2_kb, config.l3_mb);
  return buf;
}

}  // namespace forecaster
