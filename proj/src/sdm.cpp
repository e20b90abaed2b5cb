#include "sdmlab/sdm.hpp"

#include <algorithm>
#include <unordered_set>

#include "sdmlab/rng.hpp"

namespace sdmlab {

namespace {

// Address sampling switches to enumerate-and-shuffle when the request covers
// more than half of a space small enough to enumerate; rejection sampling
// degrades badly there (coupon collector).
constexpr std::size_t kEnumerableDimensionLimit = 22;

std::vector<BitVector> sample_addresses(const SdmConfig& config) {
  const std::size_t n = config.dimension;
  const std::size_t count = config.hard_location_count;
  std::mt19937_64 gen(rng::derive_seed(config.seed, "hard-locations"));

  if (n <= kEnumerableDimensionLimit) {
    const std::uint64_t space = std::uint64_t{1} << n;
    if (count * 2 > space) {
      // Partial Fisher-Yates over the full enumeration.
      std::vector<std::uint32_t> pool(space);
      for (std::uint64_t v = 0; v < space; ++v) pool[v] = static_cast<std::uint32_t>(v);
      std::vector<BitVector> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t j = i + rng::uniform_below(gen, space - i);
        std::swap(pool[i], pool[j]);
        BitVector address(n);
        for (std::size_t b = 0; b < n; ++b) {
          address.set_bit(b, (pool[i] >> b) & 1);
        }
        out.push_back(std::move(address));
      }
      return out;
    }
  }

  std::vector<BitVector> out;
  out.reserve(count);
  std::unordered_set<BitVector, BitVectorHash> seen;
  seen.reserve(count * 2);
  while (out.size() < count) {
    BitVector address = BitVector::random(n, gen);
    if (seen.insert(address).second) {
      out.push_back(std::move(address));
    }
  }
  return out;
}

}  // namespace

std::size_t median_pairwise_hamming(std::span<const BitVector> items) {
  if (items.size() < 2) {
    throw InsufficientItems("median_pairwise_hamming: need at least 2 items, got " +
                            std::to_string(items.size()));
  }
  std::vector<std::size_t> distances;
  distances.reserve(items.size() * (items.size() - 1) / 2);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      distances.push_back(hamming(items[i], items[j]));
    }
  }
  const std::size_t median_index = (distances.size() - 1) / 2;  // lower median
  std::nth_element(distances.begin(), distances.begin() + median_index, distances.end());
  return distances[median_index];
}

KanervaMemory::KanervaMemory(const SdmConfig& config) : config_(config) {
  validate_config();
  hard_locations_.reserve(config_.hard_location_count);
  for (auto& address : sample_addresses(config_)) {
    hard_locations_.push_back(
        {std::move(address), std::vector<std::int64_t>(config_.dimension, 0)});
  }
  if (config_.radius_policy.kind == RadiusPolicy::Kind::Fixed) {
    radius_ = config_.radius_policy.value;
  }
}

KanervaMemory::KanervaMemory(const SdmConfig& config,
                             std::vector<BitVector> explicit_addresses)
    : config_(config) {
  validate_config();
  if (explicit_addresses.size() != config_.hard_location_count) {
    throw InvalidConfig("explicit address list has " +
                        std::to_string(explicit_addresses.size()) + " entries, expected " +
                        std::to_string(config_.hard_location_count));
  }
  std::unordered_set<BitVector, BitVectorHash> seen;
  seen.reserve(explicit_addresses.size() * 2);
  for (const auto& address : explicit_addresses) {
    require_dimension(address);
    if (!seen.insert(address).second) {
      throw DuplicateAddress("duplicate hard-location address " + address.to_string());
    }
  }
  hard_locations_.reserve(explicit_addresses.size());
  for (auto& address : explicit_addresses) {
    hard_locations_.push_back(
        {std::move(address), std::vector<std::int64_t>(config_.dimension, 0)});
  }
  if (config_.radius_policy.kind == RadiusPolicy::Kind::Fixed) {
    radius_ = config_.radius_policy.value;
  }
}

void KanervaMemory::validate_config() const {
  if (config_.dimension == 0) {
    throw InvalidConfig("dimension must be positive");
  }
  if (config_.hard_location_count == 0) {
    throw InvalidConfig("hard_location_count must be positive");
  }
  if (config_.dimension < 64) {
    const std::uint64_t space = std::uint64_t{1} << config_.dimension;
    if (config_.hard_location_count > space) {
      throw TooManyHardLocations(std::to_string(config_.hard_location_count) +
                                 " distinct hard locations do not fit in a space of " +
                                 std::to_string(space) + " addresses");
    }
  }
  if (config_.radius_policy.kind == RadiusPolicy::Kind::Fixed &&
      config_.radius_policy.value > config_.dimension) {
    throw InvalidConfig("fixed radius " + std::to_string(config_.radius_policy.value) +
                        " exceeds dimension " + std::to_string(config_.dimension));
  }
  if (config_.counter_bound && *config_.counter_bound < 1) {
    throw InvalidConfig("counter_bound must be positive");
  }
}

void KanervaMemory::require_dimension(const BitVector& v) const {
  if (v.length() != config_.dimension) {
    throw LengthMismatch("vector length " + std::to_string(v.length()) +
                         " does not match memory dimension " +
                         std::to_string(config_.dimension));
  }
}

std::size_t KanervaMemory::radius() const {
  if (!radius_) {
    throw RadiusUnresolved("access radius has not been resolved yet");
  }
  return *radius_;
}

std::size_t KanervaMemory::resolve_radius(std::span<const BitVector> items) {
  switch (config_.radius_policy.kind) {
    case RadiusPolicy::Kind::Fixed:
      radius_ = config_.radius_policy.value;
      break;
    case RadiusPolicy::Kind::QuarterItemMedian: {
      const std::size_t median = median_pairwise_hamming(items);
      radius_ = std::max<std::size_t>(1, median / 4);
      break;
    }
    case RadiusPolicy::Kind::HardLocationMedianPlus: {
      std::vector<BitVector> addresses;
      addresses.reserve(hard_locations_.size());
      for (const auto& hl : hard_locations_) addresses.push_back(hl.address);
      const std::size_t median = median_pairwise_hamming(addresses);
      radius_ = std::min(median + config_.radius_policy.value, config_.dimension);
      break;
    }
  }
  return *radius_;
}

std::vector<std::size_t> KanervaMemory::access_sphere(const BitVector& address) const {
  const std::size_t r = radius();
  require_dimension(address);
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < hard_locations_.size(); ++i) {
    if (hamming(hard_locations_[i].address, address) <= r) {
      indices.push_back(i);
    }
  }
  return indices;
}

void KanervaMemory::write(const BitVector& datum) {
  const auto sphere = access_sphere(datum);
  for (std::size_t index : sphere) {
    auto& counters = hard_locations_[index].counters;
    for (std::size_t i = 0; i < config_.dimension; ++i) {
      std::int64_t next = counters[i] + (datum.bit(i) ? 1 : -1);
      if (config_.counter_bound) {
        next = std::clamp(next, -*config_.counter_bound, *config_.counter_bound);
      }
      counters[i] = next;
    }
  }
  ++write_count_;
}

BitVector KanervaMemory::read(const BitVector& address) const {
  const auto sphere = access_sphere(address);
  const std::uint64_t ordinal = read_ordinal_++;
  if (sphere.empty()) {
    throw EmptyAccessSphere("no hard location within radius " +
                            std::to_string(*radius_) + " of " + address.to_string());
  }
  std::vector<std::int64_t> sums(config_.dimension, 0);
  for (std::size_t index : sphere) {
    const auto& counters = hard_locations_[index].counters;
    for (std::size_t i = 0; i < config_.dimension; ++i) {
      sums[i] += counters[i];
    }
  }
  BitVector result(config_.dimension);
  for (std::size_t i = 0; i < config_.dimension; ++i) {
    bool bit = false;
    if (sums[i] > 0) {
      bit = true;
    } else if (sums[i] == 0) {
      switch (config_.tie_break) {
        case TieBreak::Zero:
          bit = false;
          break;
        case TieBreak::One:
          bit = true;
          break;
        case TieBreak::SeededRandom:
          bit = rng::derive_seed(config_.seed, "tie-break", ordinal, i) & 1;
          break;
      }
    }
    result.set_bit(i, bit);
  }
  return result;
}

}  // namespace sdmlab
