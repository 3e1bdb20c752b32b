#pragma once

// Seeded generator for self-consistent test bundles: a tiered AS topology,
// valley-free RIB samples, target prefixes, countries, traceroute corpora
// with aliases, and the prefix-to-AS table for the traced infrastructure.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "decoyplace/ingest.hpp"

namespace decoyplace {

struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t ases = 200;
  std::size_t tier1 = 6;
  std::size_t prefixes = 10;
  std::size_t vantages = 15;
  std::size_t traces = 10'000;
};

struct SynthBundle {
  std::vector<RawEdge> edges;
  std::vector<RibEntry> rib;
  std::vector<PrefixTarget> prefixes;
  CountryMap countries;
  std::vector<RouterTrace> traces;
  AliasMap aliases;
  std::vector<std::pair<Prefix, Asn>> prefix_to_as;
  std::vector<Asn> traced_ases;
};

SynthBundle generate_bundle(const SynthConfig& config);

/// Writes `<stem>.rib.txt`, `.rels.txt`, `.prefixes.txt`, `.countries.txt`,
/// `.censors.txt`, `.traces.txt`, `.aliases.txt` and `.p2a.txt` into `dir`.
void write_bundle(const SynthBundle& bundle, const std::filesystem::path& dir, const std::string& stem = "synth");

/// Small deterministic helpers over mt19937_64, whose output sequence is
/// fixed by the standard (unlike the std distributions).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace decoyplace
