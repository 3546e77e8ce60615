#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bac/binary.hpp"
#include "bac/chain.hpp"
#include "bac/total.hpp"

namespace bac {

using nlohmann::json;

// Scalars encode as "num/den" strings over Q (den omitted when 1) and as
// plain integers over F_p.  A field descriptor is {"field":"Q"} or
// {"field":"Fp","p":<prime>}; composite objects carry those keys inline.

inline json field_to_json(const FieldDesc& f) {
  json j;
  if (f.is_rational()) {
    j["field"] = "Q";
  } else {
    j["field"] = "Fp";
    j["p"] = f.p;
  }
  return j;
}

inline FieldDesc field_from_json(const json& j) {
  if (!j.contains("field")) throw ParseError("missing field descriptor");
  std::string kind = j.at("field").get<std::string>();
  if (kind == "Q") return FieldDesc::rationals();
  if (kind == "Fp") {
    if (!j.contains("p")) throw ParseError("prime field without modulus");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    if (!is_prime_u64(p)) throw ParseError("modulus " + std::to_string(p) + " is not prime");
    return FieldDesc::prime(p);
  }
  throw ParseError("unknown field kind: " + kind);
}

inline json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.str();
  return s.res();
}

inline Scalar scalar_from_json(const json& j, const FieldDesc& f) {
  if (f.is_rational()) {
    if (j.is_string()) return Scalar::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
    throw ParseError("expected rational scalar");
  }
  if (!j.is_number_integer()) throw ParseError("expected residue scalar");
  return Scalar::from_int(f, j.get<long long>());
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Shape is taken from context since empty rows do not determine a width.
inline Matrix matrix_from_json(const json& j, const FieldDesc& f, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("matrix row count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) throw ParseError("matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(row.at(c), f);
  }
  return m;
}

inline std::vector<std::size_t> dims_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("dims must be a non-empty array");
  return j.get<std::vector<std::size_t>>();
}

inline json diffs_to_json(const std::vector<Matrix>& diffs) {
  json a = json::array();
  for (const auto& d : diffs) a.push_back(matrix_to_json(d));
  return a;
}

inline std::vector<Matrix> diffs_from_json(const json& j, const FieldDesc& f,
                                           const std::vector<std::size_t>& dims) {
  if (!j.is_array() || j.size() + 1 != dims.size()) throw ParseError("differential count mismatch");
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n < dims.size(); ++n)
    diffs.push_back(matrix_from_json(j.at(n - 1), f, dims[n - 1], dims[n]));
  return diffs;
}

inline json to_json(const ChainComplex& c) {
  json j = field_to_json(c.field());
  j["dims"] = c.graded().dims;
  j["diff"] = diffs_to_json(c.diffs());
  return j;
}

inline ChainComplex chain_from_json(const json& j) {
  FieldDesc f = field_from_json(j);
  auto dims = dims_from_json(j.at("dims"));
  return ChainComplex(GradedObject(f, dims), diffs_from_json(j.at("diff"), f, dims));
}

inline json to_json(const BinaryComplex& p) {
  json j = field_to_json(p.field());
  j["dims"] = p.graded().dims;
  j["top"] = diffs_to_json(p.top_diffs());
  j["bot"] = diffs_to_json(p.bot_diffs());
  return j;
}

inline BinaryComplex binary_from_json(const json& j) {
  FieldDesc f = field_from_json(j);
  auto dims = dims_from_json(j.at("dims"));
  return BinaryComplex(GradedObject(f, dims), diffs_from_json(j.at("top"), f, dims),
                       diffs_from_json(j.at("bot"), f, dims));
}

inline json square_maps_to_json(const std::vector<Matrix>& maps) {
  json a = json::array();
  for (const auto& m : maps) a.push_back(matrix_to_json(m));
  return a;
}

inline json to_json(const BinaryLadder& l) {
  json j;
  j["source"] = to_json(l.source);
  j["target"] = to_json(l.target);
  j["sigma"] = square_maps_to_json(l.sigma);
  j["tau"] = square_maps_to_json(l.tau);
  return j;
}

inline BinaryLadder ladder_from_json(const json& j) {
  BinaryComplex src = binary_from_json(j.at("source"));
  BinaryComplex tgt = binary_from_json(j.at("target"));
  const FieldDesc f = src.field();
  std::size_t k = std::max(src.length(), tgt.length());
  auto maps = [&](const json& a) {
    if (!a.is_array() || a.size() != k + 1) throw ParseError("ladder map count mismatch");
    std::vector<Matrix> out;
    for (std::size_t n = 0; n <= k; ++n)
      out.push_back(matrix_from_json(a.at(n), f, tgt.dim(n), src.dim(n)));
    return out;
  };
  std::vector<Matrix> sigma = maps(j.at("sigma"));
  std::vector<Matrix> tau = maps(j.at("tau"));
  return BinaryLadder{std::move(src), std::move(tgt), std::move(sigma), std::move(tau)};
}

inline json to_json(const BinarySes& s) {
  json j;
  j["sub"] = to_json(s.sub);
  j["total"] = to_json(s.total);
  j["quot"] = to_json(s.quot);
  j["incl"] = square_maps_to_json(s.incl);
  j["proj"] = square_maps_to_json(s.proj);
  return j;
}

inline BinarySes ses_from_json(const json& j) {
  BinaryComplex sub = binary_from_json(j.at("sub"));
  BinaryComplex total = binary_from_json(j.at("total"));
  BinaryComplex quot = binary_from_json(j.at("quot"));
  const FieldDesc f = total.field();
  std::size_t k = total.length();
  auto maps = [&](const json& a, bool incl) {
    if (!a.is_array() || a.size() != k + 1) throw ParseError("ses map count mismatch");
    std::vector<Matrix> out;
    for (std::size_t n = 0; n <= k; ++n)
      out.push_back(incl ? matrix_from_json(a.at(n), f, total.dim(n), sub.dim(n))
                         : matrix_from_json(a.at(n), f, quot.dim(n), total.dim(n)));
    return out;
  };
  std::vector<Matrix> incl = maps(j.at("incl"), true);
  std::vector<Matrix> proj = maps(j.at("proj"), false);
  return BinarySes{std::move(sub), std::move(total), std::move(quot), std::move(incl), std::move(proj)};
}

inline json to_json(const NenashevDiagram& d) {
  json j;
  j["rows"] = {{"M", to_json(d.row_m)}, {"N", to_json(d.row_n)}, {"P", to_json(d.row_p)}};
  auto arr = [](const std::array<Matrix, 3>& ms) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(matrix_to_json(m));
    return a;
  };
  j["vertical"] = {{"mn_top", arr(d.mn_top)},
                   {"mn_bot", arr(d.mn_bot)},
                   {"np_top", arr(d.np_top)},
                   {"np_bot", arr(d.np_bot)}};
  return j;
}

inline NenashevDiagram nenashev_from_json(const json& j) {
  BinaryComplex m = binary_from_json(j.at("rows").at("M"));
  BinaryComplex n = binary_from_json(j.at("rows").at("N"));
  BinaryComplex p = binary_from_json(j.at("rows").at("P"));
  const FieldDesc f = m.field();
  const json& v = j.at("vertical");
  auto arr = [&](const char* key, const BinaryComplex& from, const BinaryComplex& to) {
    const json& a = v.at(key);
    if (!a.is_array() || a.size() != 3) throw ParseError("vertical map count mismatch");
    std::array<Matrix, 3> out{Matrix(f, 0, 0), Matrix(f, 0, 0), Matrix(f, 0, 0)};
    for (std::size_t i = 0; i < 3; ++i) out[i] = matrix_from_json(a.at(i), f, to.dim(i), from.dim(i));
    return out;
  };
  return NenashevDiagram{m, n, p, arr("mn_top", m, n), arr("mn_bot", m, n),
                         arr("np_top", n, p), arr("np_bot", n, p)};
}

inline json to_json(const RelationExpr& e) {
  json terms = json::array();
  for (const auto& [c, p] : e.terms) terms.push_back({{"coeff", c}, {"complex", to_json(p)}});
  json j = field_to_json(e.field);
  j["terms"] = std::move(terms);
  return j;
}

inline RelationExpr relation_from_json(const json& j) {
  RelationExpr e(field_from_json(j));
  for (const json& t : j.at("terms"))
    e.add(t.at("coeff").get<long long>(), binary_from_json(t.at("complex")));
  return e;
}

}  // namespace bac
