#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdir/arith_function.hpp"
#include "mdir/errors.hpp"
#include "mdir/prime_series.hpp"
#include "mdir/rational.hpp"

namespace mdir {

using OrderedJson = nlohmann::ordered_json;

// Function file schema:
//   {"k": int, "box": {"mode": "cube"|"product", "T": int},
//    "values": [{"n": [int,...], "v": "p/q"}, ...]}
// Omitted entries are zero; duplicate indices are an error. Values are written
// in lexicographic index order, so serialization is byte-deterministic.

inline OrderedJson function_to_json(const ArithFunction& f) {
  OrderedJson j;
  j["k"] = f.arity();
  j["box"] = {{"mode", f.box().mode == Box::Mode::cube ? "cube" : "product"},
              {"T", f.box().limit}};
  OrderedJson values = OrderedJson::array();
  for (std::size_t i = 0; i < f.keys().size(); ++i) {
    OrderedJson item;
    item["n"] = std::vector<Coord>(f.keys()[i].begin(), f.keys()[i].end());
    item["v"] = to_fraction_string(f.values()[i]);
    values.push_back(std::move(item));
  }
  j["values"] = std::move(values);
  return j;
}

inline ArithFunction function_from_json(const OrderedJson& j) {
  try {
    const int k = j.at("k").get<int>();
    const auto& jbox = j.at("box");
    const std::string mode = jbox.at("mode").get<std::string>();
    if (mode != "cube" && mode != "product") throw InputError("unknown box mode: " + mode);
    const std::int64_t limit = jbox.at("T").get<std::int64_t>();
    if (k < 1 || limit < 1) throw InputError("function file: k and T must be positive");
    const Box box{mode == "cube" ? Box::Mode::cube : Box::Mode::product,
                  static_cast<std::uint64_t>(limit)};
    ArithFunctionBuilder b(k, box);
    for (const auto& item : j.at("values")) {
      const auto coords = item.at("n").get<std::vector<std::int64_t>>();
      if (static_cast<int>(coords.size()) != k)
        throw InputError("function file: index arity mismatch");
      MultiIndex::Storage s;
      for (std::int64_t c : coords) {
        if (c < 1) throw InputError("function file: index entries must be positive");
        s.push_back(static_cast<Coord>(c));
      }
      b.set(MultiIndex(std::move(s)), parse_fraction(item.at("v").get<std::string>()));
    }
    return std::move(b).build();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed function file: ") + e.what());
  }
}

inline void write_function_file(const ArithFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << function_to_json(f).dump() << "\n";
}

inline ArithFunction read_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open: " + path);
  OrderedJson j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return function_from_json(j);
}

// Power-series export: {"monomials": [{"exp": [[slot,power],...], "coef": "p/q"}]},
// slots ascending within a monomial, monomials in lexicographic exponent order.
inline OrderedJson series_to_json(const TruncatedSeries& s) {
  OrderedJson j;
  OrderedJson monomials = OrderedJson::array();
  for (const auto& [ev, coef] : s.coefficients()) {
    OrderedJson item;
    OrderedJson exp = OrderedJson::array();
    for (const auto& [slot, power] : ev.terms())
      exp.push_back(OrderedJson::array({slot, power}));
    item["exp"] = std::move(exp);
    item["coef"] = to_fraction_string(coef);
    monomials.push_back(std::move(item));
  }
  j["monomials"] = std::move(monomials);
  return j;
}

}  // namespace mdir
