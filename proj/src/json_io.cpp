#include "torus/json_io.hpp"

namespace torus {

json integer_to_json(const Integer &x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const json &j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad integer " + j.dump());
    return x;
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

json poly_to_json(const LaurentPoly &p) { return p.to_string(); }

LaurentPoly poly_from_json(const json &j) {
  if (j.is_number_integer()) return LaurentPoly::constant(integer_from_json(j));
  if (j.is_string()) return LaurentPoly::parse(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected a Laurent polynomial, got " + j.dump());
}

json matrix_to_json(const PolyMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const IntMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

PolyMatrix poly_matrix_from_json(const json &j) {
  const json &rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
  std::size_t r = rows.size(), c = 0;
  for (auto &row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "matrix rows must be arrays");
    if (c == 0) c = row.size();
    if (row.size() != c || c == 0) throw Error(ErrorKind::ParseError, "ragged matrix");
  }
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m(i, k) = poly_from_json(rows[i][k]);
  return m;
}

json group_to_json(const AbelianGroup &g) {
  json t = json::array();
  for (auto &x : g.torsion) t.push_back(integer_to_json(x));
  return {{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.to_string()}};
}

json whitehead_to_json(const WhiteheadElement &w) {
  json d = json::array(), o = json::array();
  for (auto &[key, c] : w.diagonal) d.push_back({{"i", key.first}, {"a", key.second}, {"coeff", integer_to_json(c)}});
  for (auto &[key, c] : w.offdiag)
    o.push_back({{"a", std::get<0>(key)}, {"i", std::get<1>(key)}, {"j", std::get<2>(key)}, {"coeff", integer_to_json(c)}});
  return {{"n", w.n}, {"k", w.k}, {"g", w.g}, {"diagonal", d}, {"offdiag", o}, {"text", w.to_string()}};
}

} // namespace torus
