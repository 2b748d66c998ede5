#include "bigeo/design_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "bigeo/errors.hpp"

namespace bigeo {

namespace {

// Splits "x12" into ("x", 12); labels without a numeric tail sort after
// numbered labels of the same prefix.
struct NaturalKey {
  std::string prefix;
  bool numbered;
  unsigned long long number;
  std::string label;

  friend auto operator<=>(const NaturalKey&, const NaturalKey&) = default;
};

NaturalKey natural_key(const std::string& label) {
  std::size_t digits = label.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(label[digits - 1]))) --digits;
  const std::size_t tail = label.size() - digits;
  if (tail == 0 || tail > 18) return {label, false, 0, label};
  return {label.substr(0, digits), true, std::stoull(label.substr(digits)), label};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read design file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_json_path(const std::filesystem::path& path) { return path.extension() == ".json"; }

}  // namespace

nlohmann::json design_to_json(const Design& design) {
  nlohmann::json doc{{"n", design.point_count()}, {"blocks", design.blocks()}};
  if (!design.labels().empty()) doc["labels"] = design.labels();
  return doc;
}

Design design_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("design JSON must be an object", 0);
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("design JSON needs an integer field \"n\"", 0);
  }
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
    throw ParseError("design JSON needs an array field \"blocks\"", 0);
  }
  const auto n = doc["n"].get<std::int64_t>();
  if (n <= 0) throw StructuralError("design JSON: \"n\" must be positive");

  std::vector<Block> blocks;
  for (std::size_t i = 0; i < doc["blocks"].size(); ++i) {
    const auto& entry = doc["blocks"][i];
    if (!entry.is_array()) throw ParseError("block " + std::to_string(i) + " is not an array", 0);
    Block block;
    for (const auto& point : entry) {
      if (!point.is_number_integer()) {
        throw ParseError("block " + std::to_string(i) + " holds a non-integer point", 0);
      }
      const auto p = point.get<std::int64_t>();
      if (p < 0 || p >= n) {
        throw StructuralError("block " + std::to_string(i) + " contains point index " +
                              std::to_string(p) + " outside [0, " + std::to_string(n) + ")");
      }
      block.push_back(static_cast<Point>(p));
    }
    blocks.push_back(std::move(block));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("\"labels\" must be an array of strings", 0);
    for (const auto& label : doc["labels"]) {
      if (!label.is_string()) throw ParseError("\"labels\" must be an array of strings", 0);
      labels.push_back(label.get<std::string>());
    }
  }
  return Design(static_cast<std::size_t>(n), std::move(blocks), std::move(labels));
}

Design parse_design_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("design JSON: ") + e.what(), e.byte);
  }
  return design_from_json(doc);
}

Design parse_design_text(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> row;
    for (std::string label; fields >> label;) {
      if (label.find_first_of("{},\"") != std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid character in label '" +
                             label + "'",
                         line_no);
      }
      row.push_back(std::move(label));
    }
    if (row.empty()) continue;
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw ParseError("design text contains no blocks", 0);

  std::vector<NaturalKey> keys;
  for (const auto& row : rows) {
    for (const auto& label : row) keys.push_back(natural_key(label));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::map<std::string, Point> index;
  std::vector<std::string> labels;
  for (const auto& key : keys) {
    index.emplace(key.label, labels.size());
    labels.push_back(key.label);
  }

  std::vector<Block> blocks;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Block block;
    for (const auto& label : rows[i]) block.push_back(index.at(label));
    std::sort(block.begin(), block.end());
    if (auto dup = std::adjacent_find(block.begin(), block.end()); dup != block.end()) {
      throw StructuralError("line " + std::to_string(row_lines[i]) + ": point '" +
                            labels[*dup] + "' appears twice in one block");
    }
    blocks.push_back(std::move(block));
  }
  const std::size_t n_points = labels.size();
  return Design(n_points, std::move(blocks), std::move(labels));
}

std::string format_design_text(const Design& design) {
  std::string out;
  for (const Block& block : design.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ' ';
      out += design.label(block[i]);
    }
    out += '\n';
  }
  return out;
}

Design load_design(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return is_json_path(path) ? parse_design_json(text) : parse_design_text(text);
}

void save_design(const Design& design, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write design file " + path.string());
  if (is_json_path(path)) {
    out << design_to_json(design).dump(2) << '\n';
  } else {
    out << format_design_text(design);
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace bigeo
