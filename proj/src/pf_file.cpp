#include "vecgames/io/pf_file.hpp"

#include <charconv>
#include <fstream>

#include "json.hpp"
#include "vecgames/concepts/dominance.hpp"
#include "vecgames/core/errors.hpp"

namespace vecgames {

void PfFile::validate() const {
  for (const auto& p : points) {
    if (p.size() != points.front().size())
      raise(Errc::FileInvalid, "front points with different lengths");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j && strictly_dominates(points[i], points[j]))
        raise(Errc::FileInvalid, "front points must be mutually non-dominated");
    }
  }
}

std::string PfFile::to_json() const {
  validate();
  nlohmann::json doc;
  doc["format_version"] = format_version;
  doc["env"] = env;
  doc["algorithm"] = algorithm;
  doc["seed"] = seed;
  if (!reference_point.empty()) doc["reference_point"] = reference_point;
  doc["points"] = points;
  return doc.dump(2) + "\n";
}

PfFile PfFile::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::FileInvalid, std::string("not valid JSON: ") + e.what());
  }
  PfFile file;
  try {
    file.format_version = doc.at("format_version").get<int>();
    file.env = doc.value("env", "");
    file.algorithm = doc.value("algorithm", "");
    file.seed = doc.value("seed", Seed{0});
    if (doc.contains("reference_point"))
      file.reference_point = doc.at("reference_point").get<ObjectiveVector>();
    file.points = doc.at("points").get<std::vector<ObjectiveVector>>();
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::FileInvalid, std::string("missing or malformed field: ") + e.what());
  }
  if (file.format_version != 1) raise(Errc::FileInvalid, "unsupported format_version");
  return file;
}

void PfFile::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::RuntimeFailure, "cannot write " + path);
  out << to_json();
}

PfFile PfFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::FileInvalid, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json(text);
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) buffer_ += ',';
    buffer_ += header[i];
  }
  buffer_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != columns_) raise(Errc::RuntimeFailure, "CSV row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) buffer_ += ',';
    buffer_ += format_double(values[i]);
  }
  buffer_ += '\n';
}

void CsvWriter::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::RuntimeFailure, "cannot write " + path);
  out << buffer_;
}

}  // namespace vecgames
