#include "qstx/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "qstx/errors.hpp"

namespace qstx::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json complex_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed()}});
  return json{{"passed", r.passed}, {"notes", r.notes}, {"checks", checks}};
}

}  // namespace

std::string to_json(const RunResult& result) {
  json outputs;
  if (!result.scalars.empty()) {
    json scalars;
    for (const auto& [k, v] : result.scalars) scalars[k] = v;
    outputs["scalars"] = scalars;
  }
  if (!result.vectors.empty()) {
    json vectors;
    for (const auto& [k, v] : result.vectors) vectors[k] = v;
    outputs["vectors"] = vectors;
  }
  if (!result.matrices.empty()) {
    json matrices;
    for (const auto& [k, m] : result.matrices) {
      json entries = json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          entries.push_back(complex_json(m(i, j)));
      matrices[k] = json{{"rows", m.rows()}, {"cols", m.cols()},
                         {"entries", entries}};
    }
    outputs["matrices"] = matrices;
  }
  if (!result.tables.empty()) {
    json tables;
    for (const auto& [k, t] : result.tables)
      tables[k] = json{{"columns", t.columns}, {"rows", t.rows}};
    outputs["tables"] = tables;
  }
  if (!result.reports.empty()) {
    json reports;
    for (const auto& [k, r] : result.reports) reports[k] = report_json(r);
    outputs["reports"] = reports;
  }

  json doc{{"scenario", result.scenario},
           {"outputs", outputs},
           {"metadata", json{{"tolerances", result.tolerances}}}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const RunResult& result) {
  std::string out;
  out += "# scenario," + result.scenario + "\n";
  if (!result.scalars.empty()) {
    out += "# scalars\nname,value\n";
    for (const auto& [k, v] : result.scalars) out += k + "," + num(v) + "\n";
  }
  for (const auto& [k, v] : result.vectors) {
    out += "# vector:" + k + "\nindex,value\n";
    for (std::size_t i = 0; i < v.size(); ++i)
      out += std::to_string(i) + "," + num(v[i]) + "\n";
  }
  for (const auto& [k, m] : result.matrices) {
    out += "# matrix:" + k + "\nrow,col,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        out += std::to_string(i) + "," + std::to_string(j) + "," +
               num(m(i, j).real()) + "," + num(m(i, j).imag()) + "\n";
  }
  for (const auto& [k, t] : result.tables) {
    out += "# table:" + k + "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      out += (c ? "," : "") + t.columns[c];
    out += "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out += (c ? "," : "") + num(row[c]);
      out += "\n";
    }
  }
  for (const auto& [k, r] : result.reports) {
    out += "# report:" + k + "\ncheck,residual,tolerance,passed\n";
    for (const auto& c : r.checks)
      out += c.name + "," + num(c.residual) + "," + num(c.tolerance) + "," +
             (c.passed() ? "1" : "0") + "\n";
  }
  if (!result.tolerances.empty()) {
    out += "# tolerances\nname,value\n";
    for (const auto& [k, v] : result.tolerances) out += k + "," + num(v) + "\n";
  }
  return out;
}

void emit(const RunResult& result, Format format, const std::string& path) {
  const std::string payload =
      format == Format::json ? to_json(result) : to_csv(result);
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open output file: " + path);
  f << payload;
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace qstx::cli
