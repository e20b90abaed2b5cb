#pragma once

// Parameter catalogs. The standard catalog is the fixed, ordered list of 21
// binary word-order parameters from the SSWL database that the bundled
// dataset and the CSV schema are built around; custom catalogs of other
// widths are allowed for small harnesses.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdmlab {

class ParameterCatalog {
 public:
  struct Entry {
    std::string id;
    std::string label;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Entries must be nonempty with unique ids.
  explicit ParameterCatalog(std::vector<Entry> entries);

  // The 21 SSWL word-order parameters, ids 01..20 plus A01, in fixed order.
  static const ParameterCatalog& standard();

  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& entry(std::size_t index) const { return entries_.at(index); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  friend bool operator==(const ParameterCatalog&, const ParameterCatalog&) = default;

 private:
  std::vector<Entry> entries_;
};

// Per-parameter prevalence of value 1 across the SSWL sample the standard
// catalog's frequency table was published from. Used as the generator
// distribution for frequency-matched synthetic datasets and baselines.
const std::vector<double>& sswl_reference_frequencies();

}  // namespace sdmlab
