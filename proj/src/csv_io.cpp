#include "lgfo/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lgfo {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string row_msg(const std::string& what, std::size_t row) {
  return what + " at row " + std::to_string(row);
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

Dataset parse_dataset(std::istream& in) {
  std::string line;
  std::size_t row = 0;

  if (!std::getline(in, line)) throw std::runtime_error("empty input");
  ++row;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split_fields(line);
  const std::vector<std::string> expected = {"id", "score", "group", "label"};
  for (const std::string& column : expected)
    if (std::find(header.begin(), header.end(), column) == header.end())
      throw std::runtime_error("missing column '" + column +
                               "' in header (expected id,score,group,label)");
  if (header != expected)
    throw std::runtime_error("header must be exactly id,score,group,label");

  std::vector<ScoredExample> examples;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 4)
      throw std::runtime_error(row_msg("expected 4 fields", row));

    ScoredExample ex;
    ex.id = fields[0];

    const std::string& score_text = fields[1];
    const auto res = std::from_chars(
        score_text.data(), score_text.data() + score_text.size(), ex.score);
    if (res.ec != std::errc() ||
        res.ptr != score_text.data() + score_text.size())
      throw std::runtime_error(row_msg("non-numeric score", row));
    if (!(ex.score >= 0.0 && ex.score <= 1.0))
      throw std::runtime_error(row_msg("score out of range", row));

    if (fields[2] == "0" || fields[2] == "1")
      ex.group = fields[2] == "1";
    else
      throw std::runtime_error(row_msg("group must be 0 or 1", row));
    if (fields[3] == "0" || fields[3] == "1")
      ex.label = fields[3] == "1";
    else
      throw std::runtime_error(row_msg("label must be 0 or 1", row));

    examples.push_back(std::move(ex));
  }
  if (examples.empty()) throw std::runtime_error("no data rows");
  return Dataset(std::move(examples));
}

Dataset parse_dataset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dataset(in);
}

void write_dataset(const Dataset& dataset, std::ostream& out) {
  out << "id,score,group,label\n";
  for (const ScoredExample& ex : dataset.examples())
    out << ex.id << ',' << format_double(ex.score) << ',' << ex.group << ','
        << ex.label << '\n';
}

}  // namespace lgfo
