#pragma once

// JSON documents for matrices, framed links and reports. Integers are read
// from JSON numbers or decimal strings and written as numbers when they fit
// in 64 bits, as decimal strings otherwise.

#include "dehn/integer.hpp"
#include "dehn/integer_matrix.hpp"
#include "dehn/slope.hpp"
#include "dehn/surgery.hpp"
#include "dehn/two_bridge.hpp"

#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace dehn::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& x) {
  if (fits_int64(x)) return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

inline Json to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// {"rows": r, "cols": c, "entries": [[...], ...]}. Either dimension may be
/// omitted when it can be inferred from a nonempty entries array.
inline IntegerMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw InputError("matrix document needs an \"entries\" array");
  }
  const Json& entries = j["entries"];
  std::size_t rows = entries.size();
  std::size_t cols = rows > 0 && entries[0].is_array() ? entries[0].size() : 0;
  auto dimension = [&j](const char* key, std::size_t inferred, bool can_infer) {
    if (!j.contains(key)) {
      if (!can_infer) throw InputError(std::string("matrix document needs \"") + key + "\"");
      return inferred;
    }
    if (!j[key].is_number_unsigned()) throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
    return j[key].get<std::size_t>();
  };
  rows = dimension("rows", rows, true);
  cols = dimension("cols", cols, !entries.empty());
  if (entries.size() != rows) throw InputError("entries has " + std::to_string(entries.size()) + " rows, expected " + std::to_string(rows));
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) {
      throw InputError("row " + std::to_string(i) + " does not have " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(entries[i][k]);
  }
  return m;
}

inline Json to_json(const AbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(to_json(d));
  return Json{{"free_rank", g.free_rank()}, {"invariant_factors", std::move(factors)}, {"group", g.str()}};
}

inline Json to_json(const Slope& s) { return s.str(); }

inline Slope slope_from_json(const Json& j) {
  if (j.is_string()) return Slope::parse(j.get<std::string>());
  if (j.is_number_integer()) return Slope::integral(integer_from_json(j));
  throw InputError("expected a slope string \"p/q\", got " + j.dump());
}

/// {"components": m, "labels": [...], "linking": [[...]], "fillings": {"a": "p/q"}}
/// Filling keys are labels or decimal component indices.
inline SurgeryDescription surgery_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("framed-link document must be a JSON object");
  if (!j.contains("linking")) throw InputError("framed-link document needs \"linking\"");
  IntegerMatrix lk = matrix_from_json(Json{{"entries", j["linking"]}});
  if (j.contains("components")) {
    if (!j["components"].is_number_unsigned() || j["components"].get<std::size_t>() != lk.rows()) {
      throw InputError("\"components\" does not match the linking matrix size");
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw InputError("\"labels\" must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw InputError("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  try {
    FramedLink link(std::move(lk), std::move(labels));
    FillingSpec fill;
    if (j.contains("fillings")) {
      if (!j["fillings"].is_object()) throw InputError("\"fillings\" must be an object");
      for (const auto& [key, value] : j["fillings"].items()) {
        fill.insert_or_assign(link.index_of(key), slope_from_json(value));
      }
    }
    return {std::move(link), std::move(fill)};
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

inline Json to_json(const SurgeryDescription& s) {
  Json labels = Json::array();
  for (std::size_t i = 0; i < s.link.size(); ++i) labels.push_back(s.link.label(i));
  Json fillings = Json::object();
  for (const auto& [i, slope] : s.fill) fillings[s.link.label(i)] = slope.str();
  return Json{{"components", s.link.size()},
              {"labels", std::move(labels)},
              {"linking", to_json(s.link.linking())["entries"]},
              {"fillings", std::move(fillings)}};
}

inline Json parse_document(std::istream& in, const std::string& origin) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

inline Json read_document(const std::string& path) {
  if (path == "-") return parse_document(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_document(in, path);
}

inline Json to_json(const Check& c) {
  Json j{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline Json to_json(const FamilyReport& r) {
  Json fixed = Json::array();
  for (const auto& s : r.swap_fixed) fixed.push_back(s.str());
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"n", to_json(r.n)},
              {"schubert", {{"p", to_json(r.schubert.p())}, {"q", to_json(r.schubert.q())}}},
              {"components", r.components},
              {"continued_fraction", r.fraction.str()},
              {"homology", r.homology.str()},
              {"torsion", to_json(r.torsion)},
              {"lens_order", to_json(r.lens_order)},
              {"trivial_filling", r.trivial_filling.str()},
              {"zero_filling", r.zero_filling.str()},
              {"chirality", to_string(r.chirality)},
              {"null_homology", to_string(r.null_homology)},
              {"distinctness_key", to_json(r.torsion)},
              {"slope_distance_mu_lambda", to_json(r.slope_distance_mu_lambda)},
              {"swap_image_of_mu", r.swap_image_of_mu.str()},
              {"swap_fixed_slopes", std::move(fixed)},
              {"checks", std::move(checks)},
              {"passed", r.all_passed()}};
}

inline Json to_json(const FamilySweep& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  Json j{{"reports", std::move(reports)}, {"range_checks", std::move(checks)}, {"passed", s.all_passed()}};
  if (auto f = s.first_failure()) j["first_failure"] = f->name;
  return j;
}

/// Fixed-width text table with one row per family member.
inline std::string family_table(const FamilySweep& s) {
  const std::vector<std::string> head{"n", "S(p,q)", "comp", "H1(M_n)", "t(n)", "p(n)", "x->1/0", "x->0/1", "Sigma_n", "null-homology", "checks"};
  std::vector<std::vector<std::string>> rows{head};
  for (const auto& r : s.reports) {
    rows.push_back({r.n.str(), r.schubert.str(), std::to_string(r.components), r.homology.str(),
                    r.torsion.str(), r.lens_order.str(), r.trivial_filling.str(), r.zero_filling.str(),
                    to_string(r.chirality), to_string(r.null_homology), r.all_passed() ? "ok" : "FAIL"});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(c + 1 == row.size() ? 0 : width[c])) << row[c];
    }
    out << '\n';
  }
  for (const auto& c : s.checks) out << c.name << ": " << (c.passed ? "ok" : "FAIL " + c.detail) << '\n';
  return out.str();
}

}  // namespace dehn::io
