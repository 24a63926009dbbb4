#pragma once

#include <map>
#include <string>
#include <vector>

#include "qstx/report.hpp"
#include "qstx/tensor.hpp"

namespace qstx::cli {

enum class Format { json, csv };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// In-memory scenario output: named scalars, probability vectors, matrix
// dumps, numeric tables and audit reports, plus the tolerances that were
// applied.  Wall time is informational only and never emitted, so that
// identical configurations produce byte-identical output files.
struct RunResult {
  std::string scenario;
  std::map<std::string, double> scalars;
  std::map<std::string, std::vector<double>> vectors;
  std::map<std::string, ComplexMatrix> matrices;
  std::map<std::string, Table> tables;
  std::map<std::string, Report> reports;
  std::map<std::string, double> tolerances;
  double wall_seconds = 0.0;
};

// Single JSON document; complex entries as {"re": .., "im": ..}; numbers
// at full round-trip precision.
std::string to_json(const RunResult& result);

// Sectioned CSV: each output starts with a '# name' line followed by a
// header row and data rows.  Complex entries occupy (re, im) column pairs;
// 17 significant digits; LF line endings.
std::string to_csv(const RunResult& result);

// Writes to `path`, or to stdout when path is empty or "-".
void emit(const RunResult& result, Format format, const std::string& path);

}  // namespace qstx::cli
