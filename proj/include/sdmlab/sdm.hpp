#pragma once

// Kanerva network core: random hard locations in F_2^N, Hamming access
// spheres, signed per-bit counters, and majority-rule reads.
//
// Storage is autoassociative: a datum is written at the address equal to
// itself, so a read at a corrupted copy can recover the original.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdmlab/bitvector.hpp"
#include "sdmlab/errors.hpp"

namespace sdmlab {

// How the access-sphere radius is obtained.
//
//   Fixed(r)                  — use r as-is, resolved at construction.
//   QuarterItemMedian         — max(1, floor(median pairwise Hamming distance
//                               of the stored items / 4)); the floor at 1
//                               keeps degenerate datasets operable.
//   HardLocationMedianPlus(d) — median pairwise Hamming distance of the
//                               hard-location addresses, plus d.
//
// "Median" is always the lower median of the sorted multiset of all
// unordered-pair distances, duplicates included.
struct RadiusPolicy {
  enum class Kind { Fixed, QuarterItemMedian, HardLocationMedianPlus };

  Kind kind = Kind::QuarterItemMedian;
  std::size_t value = 0;  // Fixed: the radius; HardLocationMedianPlus: the delta

  static RadiusPolicy fixed(std::size_t radius) {
    return {Kind::Fixed, radius};
  }
  static RadiusPolicy quarter_item_median() {
    return {Kind::QuarterItemMedian, 0};
  }
  static RadiusPolicy hard_location_median_plus(std::size_t delta) {
    return {Kind::HardLocationMedianPlus, delta};
  }

  friend bool operator==(const RadiusPolicy&, const RadiusPolicy&) = default;
};

// What a read returns for a bit whose pooled counter sum is exactly zero.
// SeededRandom draws a coin from (memory seed, read ordinal, bit index), so
// rereads in a fixed call sequence are reproducible.
enum class TieBreak { Zero, One, SeededRandom };

struct SdmConfig {
  std::size_t dimension = 21;
  std::size_t hard_location_count = 1000;
  RadiusPolicy radius_policy = RadiusPolicy::quarter_item_median();
  TieBreak tie_break = TieBreak::Zero;
  std::optional<std::int64_t> counter_bound;  // saturation limit, >= 1
  std::uint64_t seed = 0;

  friend bool operator==(const SdmConfig&, const SdmConfig&) = default;
};

struct HardLocation {
  BitVector address;
  std::vector<std::int64_t> counters;  // one per dimension
};

// Lower median of all unordered-pair Hamming distances.
// Throws InsufficientItems when items has fewer than 2 entries.
std::size_t median_pairwise_hamming(std::span<const BitVector> items);

class KanervaMemory {
 public:
  // Samples hard-location addresses uniformly without replacement from
  // F_2^dimension using the config seed. Under RadiusPolicy::Fixed the
  // radius is resolved immediately; otherwise it stays unresolved until
  // resolve_radius() is called.
  explicit KanervaMemory(const SdmConfig& config);

  // Takes the given addresses verbatim. They must number exactly
  // hard_location_count, be pairwise distinct, and have the configured
  // dimension.
  KanervaMemory(const SdmConfig& config, std::vector<BitVector> explicit_addresses);

  const SdmConfig& config() const noexcept { return config_; }
  std::size_t dimension() const noexcept { return config_.dimension; }
  const std::vector<HardLocation>& hard_locations() const noexcept {
    return hard_locations_;
  }
  std::size_t write_count() const noexcept { return write_count_; }

  bool radius_resolved() const noexcept { return radius_.has_value(); }

  // Resolved access-sphere radius. Throws RadiusUnresolved before resolution.
  std::size_t radius() const;

  // Resolves the radius per the configured policy and stores it.
  // QuarterItemMedian consumes `items` (>= 2 entries required);
  // HardLocationMedianPlus uses the hard-location addresses; Fixed ignores
  // everything and returns the fixed value.
  std::size_t resolve_radius(std::span<const BitVector> items = {});

  // Indices of all hard locations within `radius` of `address`, ascending.
  std::vector<std::size_t> access_sphere(const BitVector& address) const;

  // Autoassociative write: every hard location within the access sphere of
  // `datum` has counter i incremented when bit i of the datum is 1 and
  // decremented when it is 0 (clamped to +-counter_bound when set).
  // write_count increments even when the sphere is empty.
  void write(const BitVector& datum);

  // Majority-rule read: bit i of the result is the sign of the pooled
  // counter-i sum over the access sphere of `address`; ties fall to the
  // tie-break policy. Throws EmptyAccessSphere when no hard location lies
  // within the radius.
  BitVector read(const BitVector& address) const;

 private:
  void validate_config() const;
  void require_dimension(const BitVector& v) const;

  SdmConfig config_;
  std::vector<HardLocation> hard_locations_;
  std::optional<std::size_t> radius_;
  std::size_t write_count_ = 0;

  // Reads are logically const; the ordinal only feeds the SeededRandom
  // tie-break coin stream.
  mutable std::uint64_t read_ordinal_ = 0;
};

}  // namespace sdmlab
