#pragma once

#include <string>
#include <vector>

#include "vecgames/core/types.hpp"

namespace vecgames {

// On-disk Pareto front: JSON with a format_version field, run metadata, an
// optional reference point, and the points themselves. Points must be
// mutually non-dominated on write; serialisation is lossless (shortest
// round-trip decimals).
struct PfFile {
  int format_version = 1;
  std::string env;
  std::string algorithm;
  Seed seed = 0;
  ObjectiveVector reference_point;  // may be empty
  std::vector<ObjectiveVector> points;

  void validate() const;
  std::string to_json() const;
  static PfFile from_json(const std::string& text);
  void save(const std::string& path) const;
  static PfFile load(const std::string& path);
};

// Deterministic CSV writer: shortest round-trip decimal formatting.
std::string format_double(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(const std::vector<double>& values);
  void save(const std::string& path) const;
  const std::string& text() const { return buffer_; }

 private:
  std::size_t columns_;
  std::string buffer_;
};

}  // namespace vecgames
