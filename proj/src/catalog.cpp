#include "sdmlab/catalog.hpp"

#include <unordered_set>

#include "sdmlab/errors.hpp"

namespace sdmlab {

ParameterCatalog::ParameterCatalog(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw InvalidConfig("catalog must have at least one entry");
  }
  std::unordered_set<std::string> ids;
  for (const auto& entry : entries_) {
    if (entry.id.empty()) {
      throw InvalidConfig("catalog entry with empty id");
    }
    if (!ids.insert(entry.id).second) {
      throw InvalidConfig("duplicate catalog id " + entry.id);
    }
  }
}

const ParameterCatalog& ParameterCatalog::standard() {
  static const ParameterCatalog catalog{{
      {"01", "Subject-Verb"},
      {"02", "Verb-Subject"},
      {"03", "Verb-Object"},
      {"04", "Object-Verb"},
      {"05", "Subject-Verb-Object"},
      {"06", "Subject-Object-Verb"},
      {"07", "Verb-Subject-Object"},
      {"08", "Verb-Object-Subject"},
      {"09", "Object-Subject-Verb"},
      {"10", "Object-Verb-Subject"},
      {"11", "Adposition-Noun-Phrase"},
      {"12", "Noun-Phrase-Adposition"},
      {"13", "Adjective-Noun"},
      {"14", "Noun-Adjective"},
      {"15", "Numeral-Noun"},
      {"16", "Noun-Numeral"},
      {"17", "Demonstrative-Noun"},
      {"18", "Noun-Demonstrative"},
      {"19", "Possessor-Noun"},
      {"20", "Noun-Possessor"},
      {"A01", "Attributive-Adjective-Agreement"},
  }};
  return catalog;
}

std::optional<std::size_t> ParameterCatalog::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].id == id) return i;
  }
  return std::nullopt;
}

const std::vector<double>& sswl_reference_frequencies() {
  static const std::vector<double> freqs{
      0.64957267,  // 01 Subject-Verb
      0.31623933,  // 02 Verb-Subject
      0.61538464,  // 03 Verb-Object
      0.32478634,  // 04 Object-Verb
      0.56837606,  // 05 Subject-Verb-Object
      0.30769232,  // 06 Subject-Object-Verb
      0.1923077,   // 07 Verb-Subject-Object
      0.15811966,  // 08 Verb-Object-Subject
      0.12393162,  // 09 Object-Subject-Verb
      0.10683761,  // 10 Object-Verb-Subject
      0.58974361,  // 11 Adposition-Noun-Phrase
      0.2905983,   // 12 Noun-Phrase-Adposition
      0.41025642,  // 13 Adjective-Noun
      0.52564102,  // 14 Noun-Adjective
      0.48290598,  // 15 Numeral-Noun
      0.38034189,  // 16 Noun-Numeral
      0.47435898,  // 17 Demonstrative-Noun
      0.38461539,  // 18 Noun-Demonstrative
      0.38034189,  // 19 Possessor-Noun
      0.49145299,  // 20 Noun-Possessor
      0.46581197,  // A01 Attributive-Adjective-Agreement
  };
  return freqs;
}

}  // namespace sdmlab
