#include "sdmlab/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "sdmlab/rng.hpp"

namespace sdmlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool parse_binary_field(std::string_view field, std::size_t line, std::size_t column) {
  if (field == "0") return false;
  if (field == "1") return true;
  throw NonBinaryValue("value '" + std::string(field) + "' is not 0 or 1 (line " +
                           std::to_string(line) + ", column " + std::to_string(column) + ")",
                       line, column);
}

}  // namespace

Dataset::Dataset(ParameterCatalog catalog, std::vector<LanguageRecord> records)
    : catalog_(std::move(catalog)), records_(std::move(records)) {
  std::unordered_set<std::string> names;
  for (const auto& record : records_) {
    if (record.name.empty()) {
      throw Error("language record with empty name");
    }
    if (!names.insert(record.name).second) {
      throw DuplicateLanguage("duplicate language name " + record.name);
    }
    if (record.values.length() != catalog_.size()) {
      throw LengthMismatch("record " + record.name + " has " +
                           std::to_string(record.values.length()) + " values, catalog has " +
                           std::to_string(catalog_.size()));
    }
  }
}

std::vector<BitVector> Dataset::vectors() const {
  std::vector<BitVector> out;
  out.reserve(records_.size());
  for (const auto& record : records_) out.push_back(record.values);
  return out;
}

Dataset parse_dataset(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos &&
      (text[first] == '{' || text[first] == '[')) {
    return parse_dataset_json(text);
  }
  return parse_dataset_csv(text);
}

Dataset parse_dataset_csv(std::string_view text) {
  const ParameterCatalog& catalog = ParameterCatalog::standard();

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t newline = text.find('\n', start);
    if (newline == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, newline - start));
    start = newline + 1;
  }

  std::size_t header_line = 0;
  while (header_line < lines.size() && trim(lines[header_line]).empty()) {
    ++header_line;
  }
  if (header_line == lines.size()) {
    throw BadHeader("empty input: expected header 'language,01,...,20,A01'", 1);
  }

  const auto header = split_fields(lines[header_line]);
  if (header.size() != catalog.size() + 1 || header[0] != "language") {
    throw BadHeader("header must be 'language' followed by the " +
                        std::to_string(catalog.size()) + " parameter ids",
                    header_line + 1);
  }
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (header[i + 1] != catalog.entry(i).id) {
      throw BadHeader("header column " + std::to_string(i + 2) + " is '" +
                          std::string(header[i + 1]) + "', expected '" +
                          catalog.entry(i).id + "'",
                      header_line + 1, i + 2);
    }
  }

  std::vector<LanguageRecord> records;
  std::unordered_set<std::string> names;
  for (std::size_t li = header_line + 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    const std::size_t line_no = li + 1;
    const auto fields = split_fields(lines[li]);
    if (fields.size() != catalog.size() + 1) {
      throw RowLengthMismatch("line " + std::to_string(line_no) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(catalog.size() + 1),
                              line_no);
    }
    std::string name(fields[0]);
    if (name.empty()) {
      throw ParseError("empty language name (line " + std::to_string(line_no) + ")",
                       line_no, 1);
    }
    if (!names.insert(name).second) {
      throw DuplicateLanguage("duplicate language " + name + " (line " +
                                  std::to_string(line_no) + ")",
                              line_no, 1);
    }
    BitVector values(catalog.size());
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      values.set_bit(i, parse_binary_field(fields[i + 1], line_no, i + 2));
    }
    records.push_back({std::move(name), std::move(values)});
  }
  return Dataset(catalog, std::move(records));
}

Dataset parse_dataset_json(std::string_view text) {
  const ParameterCatalog& catalog = ParameterCatalog::standard();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("parameters") || !doc.contains("records")) {
    throw BadHeader("JSON dataset must be an object with 'parameters' and 'records'");
  }
  const auto& params = doc["parameters"];
  if (!params.is_array() || params.size() != catalog.size()) {
    throw BadHeader("'parameters' must list the " + std::to_string(catalog.size()) +
                    " parameter ids in catalog order");
  }
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (!params[i].is_string() || params[i].get<std::string>() != catalog.entry(i).id) {
      throw BadHeader("'parameters' entry " + std::to_string(i) + " is not '" +
                      catalog.entry(i).id + "'");
    }
  }

  std::vector<LanguageRecord> records;
  std::unordered_set<std::string> names;
  std::size_t index = 0;
  for (const auto& rec : doc["records"]) {
    ++index;
    if (!rec.is_object() || !rec.contains("language") || !rec.contains("values") ||
        !rec["language"].is_string() || !rec["values"].is_array()) {
      throw ParseError("record " + std::to_string(index) +
                           " must have a 'language' string and a 'values' array",
                       index);
    }
    std::string name = rec["language"].get<std::string>();
    if (name.empty()) {
      throw ParseError("record " + std::to_string(index) + " has an empty name", index);
    }
    if (!names.insert(name).second) {
      throw DuplicateLanguage("duplicate language " + name, index);
    }
    const auto& values = rec["values"];
    if (values.size() != catalog.size()) {
      throw RowLengthMismatch("record " + name + " has " + std::to_string(values.size()) +
                                  " values, expected " + std::to_string(catalog.size()),
                              index);
    }
    BitVector bits(catalog.size());
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      if (!values[i].is_number_integer()) {
        throw NonBinaryValue("record " + name + " value " + std::to_string(i) +
                                 " is not an integer",
                             index, i + 1);
      }
      const auto v = values[i].get<std::int64_t>();
      if (v != 0 && v != 1) {
        throw NonBinaryValue("record " + name + " value " + std::to_string(i) + " is " +
                                 std::to_string(v) + ", expected 0 or 1",
                             index, i + 1);
      }
      bits.set_bit(i, v == 1);
    }
    records.push_back({std::move(name), std::move(bits)});
  }
  return Dataset(catalog, std::move(records));
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open dataset file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str());
}

std::string serialize_csv(const Dataset& dataset) {
  std::string out = "language";
  for (const auto& entry : dataset.catalog().entries()) {
    out += ',';
    out += entry.id;
  }
  out += '\n';
  for (const auto& record : dataset.records()) {
    out += record.name;
    for (std::size_t i = 0; i < dataset.dimension(); ++i) {
      out += record.values.bit(i) ? ",1" : ",0";
    }
    out += '\n';
  }
  return out;
}

std::string serialize_json(const Dataset& dataset) {
  nlohmann::json doc;
  auto& params = doc["parameters"] = nlohmann::json::array();
  for (const auto& entry : dataset.catalog().entries()) {
    params.push_back(entry.id);
  }
  auto& records = doc["records"] = nlohmann::json::array();
  for (const auto& record : dataset.records()) {
    nlohmann::json rec;
    rec["language"] = record.name;
    auto& values = rec["values"] = nlohmann::json::array();
    for (std::size_t i = 0; i < dataset.dimension(); ++i) {
      values.push_back(record.values.bit(i) ? 1 : 0);
    }
    records.push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

std::uint64_t dataset_digest(const Dataset& dataset) {
  return rng::fnv1a(serialize_csv(dataset));
}

FrequencyTable frequencies(const Dataset& dataset) {
  if (dataset.size() == 0) {
    throw EmptyDataset("cannot compute frequencies of an empty dataset");
  }
  FrequencyTable table;
  table.values.resize(dataset.dimension(), 0.0);
  for (std::size_t j = 0; j < dataset.dimension(); ++j) {
    std::size_t ones = 0;
    for (const auto& record : dataset.records()) {
      if (record.values.bit(j)) ++ones;
    }
    table.values[j] = static_cast<double>(ones) / static_cast<double>(dataset.size());
  }
  return table;
}

std::string serialize_frequency_csv(const FrequencyTable& table,
                                    const ParameterCatalog& catalog) {
  if (table.values.size() != catalog.size()) {
    throw LengthMismatch("frequency table has " + std::to_string(table.values.size()) +
                         " entries, catalog has " + std::to_string(catalog.size()));
  }
  std::string out = "parameter_id,label,frequency\n";
  char buffer[32];
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%.8f", table.values[i]);
    out += catalog.entry(i).id;
    out += ',';
    out += catalog.entry(i).label;
    out += ',';
    out += buffer;
    out += '\n';
  }
  return out;
}

std::variant<Dataset, SkipMarker> balanced_subset(const Dataset& dataset,
                                                  std::size_t parameter_index,
                                                  std::size_t size, std::uint64_t seed) {
  if (parameter_index >= dataset.dimension()) {
    throw InvalidConfig("parameter index " + std::to_string(parameter_index) +
                        " out of range for dimension " + std::to_string(dataset.dimension()));
  }
  if (size == 0) {
    throw InvalidConfig("subset size must be positive");
  }
  std::vector<std::size_t> ones;
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    (dataset.records()[i].values.bit(parameter_index) ? ones : zeros).push_back(i);
  }
  const std::size_t need_ones = (size + 1) / 2;
  const std::size_t need_zeros = size / 2;

  std::string reason;
  if (ones.size() < need_ones) {
    reason = "ones stratum has " + std::to_string(ones.size()) + " records, need " +
             std::to_string(need_ones);
  }
  if (zeros.size() < need_zeros) {
    if (!reason.empty()) reason += "; ";
    reason += "zeros stratum has " + std::to_string(zeros.size()) + " records, need " +
              std::to_string(need_zeros);
  }
  if (!reason.empty()) {
    return SkipMarker{parameter_index, std::move(reason)};
  }

  std::mt19937_64 gen(seed);
  auto draw = [&gen](std::vector<std::size_t>& pool, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + rng::uniform_below(gen, pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
  };
  draw(ones, need_ones);
  draw(zeros, need_zeros);

  std::vector<std::size_t> chosen;
  chosen.reserve(size);
  chosen.insert(chosen.end(), ones.begin(), ones.end());
  chosen.insert(chosen.end(), zeros.begin(), zeros.end());
  std::sort(chosen.begin(), chosen.end());

  std::vector<LanguageRecord> records;
  records.reserve(size);
  for (std::size_t index : chosen) {
    records.push_back(dataset.records()[index]);
  }
  return Dataset(dataset.catalog(), std::move(records));
}

Dataset synthesize_random(const FrequencyTable& freqs, std::size_t rows,
                          std::uint64_t seed, const ParameterCatalog& catalog) {
  if (rows == 0) {
    throw InvalidConfig("row count must be positive");
  }
  if (freqs.values.size() != catalog.size()) {
    throw LengthMismatch("frequency table has " + std::to_string(freqs.values.size()) +
                         " entries, catalog has " + std::to_string(catalog.size()));
  }
  for (double p : freqs.values) {
    if (p < 0.0 || p > 1.0) {
      throw InvalidConfig("frequency " + std::to_string(p) + " outside [0, 1]");
    }
  }
  std::mt19937_64 gen(seed);
  std::vector<LanguageRecord> records;
  records.reserve(rows);
  char name[32];
  for (std::size_t r = 0; r < rows; ++r) {
    std::snprintf(name, sizeof name, "rand-%04zu", r + 1);
    BitVector values(catalog.size());
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      values.set_bit(j, rng::uniform_unit(gen) < freqs.values[j]);
    }
    records.push_back({name, std::move(values)});
  }
  return Dataset(catalog, std::move(records));
}

}  // namespace sdmlab
