#pragma once

// Language datasets over a parameter catalog: parsing and serialization
// (CSV canonical, JSON mirror), prevalence frequencies, balanced subset
// sampling, and frequency-matched synthetic data.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sdmlab/bitvector.hpp"
#include "sdmlab/catalog.hpp"
#include "sdmlab/errors.hpp"

namespace sdmlab {

struct LanguageRecord {
  std::string name;
  BitVector values;  // one bit per catalog entry, catalog order

  friend bool operator==(const LanguageRecord&, const LanguageRecord&) = default;
};

class Dataset {
 public:
  // Record names must be nonempty and pairwise distinct; every value vector
  // must have the catalog's width.
  Dataset(ParameterCatalog catalog, std::vector<LanguageRecord> records);

  const ParameterCatalog& catalog() const noexcept { return catalog_; }
  const std::vector<LanguageRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  std::size_t dimension() const noexcept { return catalog_.size(); }

  std::vector<BitVector> vectors() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  ParameterCatalog catalog_;
  std::vector<LanguageRecord> records_;
};

// Parse a dataset in the canonical CSV schema:
//   header  language,01,02,...,20,A01   (exactly the standard catalog ids)
//   rows    <name>,<0|1>,...            (one row per language, fields trimmed)
// A JSON mirror of the same schema is also accepted; parse_dataset sniffs the
// format from the first non-space character.
Dataset parse_dataset(std::string_view text);
Dataset parse_dataset_csv(std::string_view text);
Dataset parse_dataset_json(std::string_view text);
Dataset load_dataset(const std::filesystem::path& path);

std::string serialize_csv(const Dataset& dataset);
std::string serialize_json(const Dataset& dataset);

// FNV-1a over the canonical CSV serialization.
std::uint64_t dataset_digest(const Dataset& dataset);

// Fraction of records with value 1, per parameter (exact count/total).
// Throws EmptyDataset when there are no records.
struct FrequencyTable {
  std::vector<double> values;

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

FrequencyTable frequencies(const Dataset& dataset);

// CSV export `parameter_id,label,frequency`, frequency at 8 decimal places.
std::string serialize_frequency_csv(const FrequencyTable& table,
                                    const ParameterCatalog& catalog);

// A parameter whose strata are too small to draw a balanced subset from.
struct SkipMarker {
  std::size_t parameter_index;
  std::string reason;
};

// Seeded uniform subset with exactly ceil(size/2) records of value 1 and
// floor(size/2) of value 0 at parameter_index (records keep dataset order).
// Returns a SkipMarker instead when either stratum is too small.
std::variant<Dataset, SkipMarker> balanced_subset(const Dataset& dataset,
                                                  std::size_t parameter_index,
                                                  std::size_t size, std::uint64_t seed);

// `rows` synthetic records named rand-0001, rand-0002, ... with bit j drawn
// as an independent seeded Bernoulli(freqs[j]).
Dataset synthesize_random(const FrequencyTable& freqs, std::size_t rows,
                          std::uint64_t seed,
                          const ParameterCatalog& catalog = ParameterCatalog::standard());

}  // namespace sdmlab
