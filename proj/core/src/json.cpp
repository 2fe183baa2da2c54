#include "cobsec/json.hpp"

#include <limits>

namespace cobsec {

Json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

Json to_json(const ChernPolynomial& p) {
  Json out = Json::object();
  for (const auto& [monomial, coeff] : p.terms()) out[to_string(monomial)] = integer_json(coeff);
  return out;
}

Json to_json(const RationalPartitionMap& values) {
  Json out = Json::object();
  for (const auto& [omega, value] : values) out[to_string(omega)] = to_string(value);
  return out;
}

Json to_json(const CobordismClass& x) {
  return Json{{"d", x.degree()}, {"class", to_string(x)}, {"coords", to_json(x.coords())}};
}

namespace {

Json entry_json(const ObstructionEntry& e) { return Json{{"omega", to_string(e.omega)}, {"value", to_string(e.value)}}; }

}  // namespace

Json to_json(const ObstructionReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(entry_json(e));
  return Json{{"d", report.degree},
              {"r", report.sections},
              {"entries", std::move(entries)},
              {"vanishes", report.vanishes},
              {"witness", report.witness ? entry_json(*report.witness) : Json(nullptr)}};
}

Json to_json(const GeneratorCheck& check) {
  Json solutions = Json::array();
  for (const auto& pp : check.prime_powers) solutions.push_back(Json{{"p", integer_json(pp.prime)}, {"q", pp.exponent}});
  return Json{{"verdict", to_string(check.verdict)},
              {"d", check.degree},
              {"s_d", integer_json(check.s_top)},
              {"prime_powers", std::move(solutions)},
              {"ambiguous", check.ambiguous},
              {"caveat", check.caveat}};
}

Json to_json(const RankTable& table) {
  Json ranks = Json::array();
  for (const auto& [degree, rank] : table.ranks) ranks.push_back(Json{{"degree", degree}, {"rank", rank}});
  Json out{{"spectrum", to_string(table.spectrum)}, {"d", table.d}};
  if (table.spectrum == Spectrum::mtu_relative) out["r"] = table.r;
  out["ranks"] = std::move(ranks);
  return out;
}

Json to_json(const SplittingCheck& check) {
  return Json{{"i", check.i},
              {"j", check.j},
              {"p", check.p},
              {"long_partitions", check.long_partitions},
              {"kernel_dimension", check.kernel_dimension},
              {"consistent", check.consistent}};
}

Json to_json(const SMatrix& s) {
  Json index = Json::array();
  for (const auto& p : s.index) index.push_back(to_string(p));
  Json rows = Json::array();
  for (std::size_t r = 0; r < s.entries.rows(); ++r) {
    Json row = Json::array();
    for (const auto& v : s.entries.row(r)) row.push_back(integer_json(v));
    rows.push_back(std::move(row));
  }
  return Json{{"d", s.degree}, {"index", std::move(index)}, {"entries", std::move(rows)}, {"determinant", integer_json(s.determinant)}};
}

}  // namespace cobsec
