#include "fmodel/operator_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace fmodel::io {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double as_double(const nlohmann::json& v) {
  if (!v.is_number()) throw Error(ErrorKind::ParseError, "matrix entry is not a number");
  return v.get<double>();
}

double parse_number(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad number '" + token + "'");
  }
  while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
  if (used != token.size()) throw Error(ErrorKind::ParseError, "bad number '" + token + "'");
  return value;
}

}  // namespace

OperatorFormat format_for(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".csv") return OperatorFormat::csv;
  return OperatorFormat::json;
}

ComplexMatrix load_operator(const std::string& path) { return load_operator(path, format_for(path)); }

ComplexMatrix load_operator(const std::string& path, OperatorFormat format) {
  const std::string text = read_file(path);
  return format == OperatorFormat::csv ? parse_operator_csv(text) : parse_operator_json(text);
}

ComplexMatrix parse_operator_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("re") || !doc.contains("im")) {
    throw Error(ErrorKind::ParseError, "expected an object with dim, re, im");
  }
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    throw Error(ErrorKind::ShapeError, "dim must be a positive integer");
  }
  const auto n = static_cast<Index>(doc["dim"].get<long long>());
  const auto& re = doc["re"];
  const auto& im = doc["im"];
  if (!re.is_array() || !im.is_array()) throw Error(ErrorKind::ParseError, "re/im must be arrays");
  if (static_cast<Index>(re.size()) != n || static_cast<Index>(im.size()) != n) {
    throw Error(ErrorKind::ShapeError, "re/im row count differs from dim");
  }
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& rr = re[static_cast<std::size_t>(i)];
    const auto& ir = im[static_cast<std::size_t>(i)];
    if (!rr.is_array() || !ir.is_array()) throw Error(ErrorKind::ParseError, "rows must be arrays");
    if (static_cast<Index>(rr.size()) != n || static_cast<Index>(ir.size()) != n) {
      throw Error(ErrorKind::ShapeError, "row length differs from dim");
    }
    for (Index j = 0; j < n; ++j) {
      m(i, j) = cplx(as_double(rr[static_cast<std::size_t>(j)]), as_double(ir[static_cast<std::size_t>(j)]));
    }
  }
  if (!m.allFinite()) throw Error(ErrorKind::ParseError, "non-finite entry");
  return m;
}

ComplexMatrix parse_operator_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_number(cell));
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Index>(rows.size());
  if (n == 0) throw Error(ErrorKind::ShapeError, "empty operator file");
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != 2 * n) {
      throw Error(ErrorKind::ShapeError, "each row needs 2*dim values (re,im pairs)");
    }
    for (Index j = 0; j < n; ++j) {
      m(i, j) = cplx(row[static_cast<std::size_t>(2 * j)], row[static_cast<std::size_t>(2 * j + 1)]);
    }
  }
  if (!m.allFinite()) throw Error(ErrorKind::ParseError, "non-finite entry");
  return m;
}

std::string operator_to_json(const ComplexMatrix& m) {
  nlohmann::ordered_json doc;
  doc["dim"] = m.rows();
  auto re = nlohmann::ordered_json::array();
  auto im = nlohmann::ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    auto rr = nlohmann::ordered_json::array();
    auto ir = nlohmann::ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc.dump() + "\n";
}

void save_operator(const ComplexMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadParam, "cannot write " + path);
  out << operator_to_json(m);
}

std::string format_double(double x) {
  char buf[32];
  for (int digits = 1; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace fmodel::io
