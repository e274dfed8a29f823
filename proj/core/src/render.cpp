// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/render.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace tkmotive {

Format parse_format(std::string_view name) {
  if (name == "human") return Format::human;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) noexcept {
  switch (f) {
    case Format::human: return "human";
    case Format::latex: return "latex";
    case Format::json: return "json";
    case Format::csv: return "csv";
  }
  return "?";
}

namespace {

// Shared descending-power writer; `term` renders |c| q^k for k >= 1.
template <class TermFn>
std::string render_descending(const QPolynomial& p, TermFn term) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    BigInt mag = negative ? BigInt(-c[k]) : c[k];
    if (k == 0) {
      out += mag.str();
    } else {
      out += term(mag, k);
    }
  }
  return out;
}

}  // namespace

std::string to_human(const QPolynomial& p) {
  return render_descending(p, [](const BigInt& mag, std::size_t k) {
    std::string s = mag == 1 ? "" : mag.str() + "*";
    s += "q";
    if (k > 1) s += "^" + std::to_string(k);
    return s;
  });
}

std::string to_latex(const QPolynomial& p) {
  return render_descending(p, [](const BigInt& mag, std::size_t k) {
    std::string s = mag == 1 ? "" : mag.str();
    s += "q";
    if (k > 1) s += "^{" + std::to_string(k) + "}";
    return s;
  });
}

std::string to_json(const QPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr.dump();
}

QPolynomial from_json(std::string_view text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& item : arr) {
    if (item.is_string()) {
      coeffs.push_back(parse_decimal(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      coeffs.emplace_back(item.get<long long>());
    } else {
      throw std::invalid_argument("polynomial JSON coefficients must be decimal strings");
    }
  }
  return QPolynomial(std::move(coeffs));
}

std::string to_csv_cell(const QPolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ';';
    out += p.coefficients()[i].str();
  }
  return out;
}

QPolynomial from_csv_cell(std::string_view cell) {
  std::vector<BigInt> coeffs;
  if (cell.empty()) return {};
  std::size_t start = 0;
  while (true) {
    auto pos = cell.find(';', start);
    coeffs.push_back(parse_decimal(std::string(cell.substr(start, pos - start))));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return QPolynomial(std::move(coeffs));
}

}  // namespace tkmotive
