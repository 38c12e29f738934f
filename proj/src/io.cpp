#include "jgeo/io.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace jgeo {

namespace {

using njson = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  fail(errc::schema_error, path + ": " + what);
}

// Rethrow value-level failures from the constructors with the field named,
// dropping the code-name prefix error::what() already carries so it is not
// repeated when the wrapper re-adds it.
template <typename Fn>
auto at_field(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(errc_name(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    fail(e.code(), path + ": " + msg);
  }
}

AlgebraShape parse_blocks(const njson& jb, const std::string& path) {
  if (!jb.is_array() || jb.empty())
    schema_fail(path, "must be a non-empty array of block sizes");
  AlgebraShape shape;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    const njson& e = jb[i];
    if (!e.is_number_integer() || e.get<long long>() < 1)
      schema_fail(path + "[" + std::to_string(i) + "]",
                  "block sizes must be integers >= 1");
    shape.blocks.push_back(static_cast<int>(e.get<long long>()));
  }
  validate_shape(shape);
  return shape;
}

Element rows_to_element(const njson& rows, const AlgebraShape& shape,
                        const std::string& path) {
  if (!rows.is_array()) schema_fail(path, "must be an array of rows");
  std::size_t expected_rows = 0;
  for (int n : shape.blocks) expected_rows += static_cast<std::size_t>(n);
  if (rows.size() != expected_rows)
    schema_fail(path, "expected " + std::to_string(expected_rows) +
                          " rows for this algebra, got " +
                          std::to_string(rows.size()));
  Element out = zero_element(shape);
  std::size_t g = 0;
  for (std::size_t k = 0; k < shape.blocks.size(); ++k) {
    const int n = shape.blocks[k];
    for (int r = 0; r < n; ++r, ++g) {
      const std::string row_path = path + "[" + std::to_string(g) + "]";
      const njson& row = rows[g];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        schema_fail(row_path,
                    "expected " + std::to_string(n) + " entries in this row");
      for (int c = 0; c < n; ++c) {
        const njson& e = row[c];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
            !e[1].is_number())
          schema_fail(row_path + "[" + std::to_string(c) + "]",
                      "complex entries are [re, im] number pairs");
        out.data[k](r, c) = cplx(e[0].get<double>(), e[1].get<double>());
      }
    }
  }
  return out;
}

ojson element_to_rows(const Element& x) {
  ojson rows = ojson::array();
  for (std::size_t k = 0; k < x.data.size(); ++k) {
    const cmat& blk = x.data[k];
    for (Eigen::Index r = 0; r < blk.rows(); ++r) {
      ojson row = ojson::array();
      for (Eigen::Index c = 0; c < blk.cols(); ++c)
        row.push_back({blk(r, c).real(), blk(r, c).imag()});
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void reject_unknown(const njson& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) schema_fail(where.empty() ? item.key() : where + "." + item.key(),
                         "unknown field");
  }
}

std::string num17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Element Document::as_element() const {
  if (kind != DocKind::element)
    fail(errc::validation_error, "document does not hold an element");
  return first;
}

StateFunctional Document::as_state() const {
  if (kind != DocKind::state)
    fail(errc::validation_error, "document does not hold a state");
  return StateFunctional::from_density(first);
}

TangentVector Document::as_tangent() const {
  if (kind != DocKind::tangent)
    fail(errc::validation_error, "document does not hold a tangent vector");
  if (at_state) return tangent_at(StateFunctional::from_density(first), second);
  return tangent_at(PositiveFunctional::from_density(first), second);
}

Document parse_document(const std::string& text) {
  njson j = njson::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    fail(errc::schema_error, "document is not well-formed JSON");
  if (!j.is_object())
    fail(errc::schema_error, "document top level must be a JSON object");
  reject_unknown(j, {"schema_version", "blocks", "algebra", "element", "state",
                     "tangent", "geodesic"},
                 "");

  Document doc;
  if (j.contains("schema_version")) {
    if (!j["schema_version"].is_string())
      schema_fail("schema_version", "must be a string");
    doc.schema_version = j["schema_version"].get<std::string>();
  }

  const bool top_blocks = j.contains("blocks");
  const bool nested = j.contains("algebra");
  if (top_blocks == nested)
    fail(errc::schema_error,
         "exactly one of 'blocks' or 'algebra' must give the block sizes");
  if (nested) {
    const njson& alg = j["algebra"];
    if (!alg.is_object()) schema_fail("algebra", "must be an object");
    reject_unknown(alg, {"blocks"}, "algebra");
    if (!alg.contains("blocks")) schema_fail("algebra.blocks", "is required");
    doc.shape = parse_blocks(alg["blocks"], "algebra.blocks");
  } else {
    doc.shape = parse_blocks(j["blocks"], "blocks");
  }

  int payloads = 0;
  for (const char* k : {"element", "state", "tangent", "geodesic"})
    payloads += j.contains(k) ? 1 : 0;
  if (payloads != 1)
    fail(errc::schema_error,
         "exactly one of 'element', 'state', 'tangent', 'geodesic' is required");

  if (j.contains("element")) {
    doc.kind = DocKind::element;
    doc.first = rows_to_element(j["element"], doc.shape, "element");
    doc.second = zero_element(doc.shape);
  } else if (j.contains("state")) {
    doc.kind = DocKind::state;
    doc.first = rows_to_element(j["state"], doc.shape, "state");
    doc.second = zero_element(doc.shape);
    at_field("state", [&] { return StateFunctional::from_density(doc.first); });
  } else if (j.contains("tangent")) {
    doc.kind = DocKind::tangent;
    const njson& t = j["tangent"];
    if (!t.is_object()) schema_fail("tangent", "must be an object");
    reject_unknown(t, {"base", "value", "at_state"}, "tangent");
    if (!t.contains("base") || !t.contains("value"))
      schema_fail("tangent", "needs 'base' and 'value'");
    if (t.contains("at_state")) {
      if (!t["at_state"].is_boolean())
        schema_fail("tangent.at_state", "must be a boolean");
      doc.at_state = t["at_state"].get<bool>();
    }
    doc.first = rows_to_element(t["base"], doc.shape, "tangent.base");
    doc.second = rows_to_element(t["value"], doc.shape, "tangent.value");
    doc.has_second = true;
    at_field("tangent", [&] { return doc.as_tangent(); });
  } else {
    doc.kind = DocKind::geodesic;
    const njson& g = j["geodesic"];
    if (!g.is_object()) schema_fail("geodesic", "must be an object");
    reject_unknown(g, {"state", "direction"}, "geodesic");
    if (!g.contains("state") || !g.contains("direction"))
      schema_fail("geodesic", "needs 'state' and 'direction'");
    doc.first = rows_to_element(g["state"], doc.shape, "geodesic.state");
    doc.second = rows_to_element(g["direction"], doc.shape, "geodesic.direction");
    doc.has_second = true;
    at_field("geodesic.state",
             [&] { return StateFunctional::from_density(doc.first); });
    at_field("geodesic.direction", [&] {
      require_self_adjoint(doc.second, "geodesic direction");
      return 0;
    });
  }
  return doc;
}

Document element_document(const Element& x) {
  return {"1", DocKind::element, x.shape, x, zero_element(x.shape), false, true};
}

Document state_document(const StateFunctional& rho) {
  return {"1", DocKind::state, rho.density.shape, rho.density,
          zero_element(rho.density.shape), false, true};
}

Document tangent_document(const TangentVector& v) {
  return {"1",     DocKind::tangent, v.base.shape, v.base,
          v.value, true,             v.at_state};
}

Document geodesic_document(const StateFunctional& rho, const Element& direction) {
  return {"1",       DocKind::geodesic, rho.density.shape, rho.density,
          direction, true,              true};
}

std::string emit(const Document& doc) {
  ojson out;
  out["schema_version"] = doc.schema_version.empty() ? "1" : doc.schema_version;
  out["algebra"]["blocks"] = doc.shape.blocks;
  switch (doc.kind) {
    case DocKind::element:
      out["element"] = element_to_rows(doc.first);
      break;
    case DocKind::state:
      out["state"] = element_to_rows(doc.first);
      break;
    case DocKind::tangent:
      out["tangent"]["base"] = element_to_rows(doc.first);
      out["tangent"]["value"] = element_to_rows(doc.second);
      out["tangent"]["at_state"] = doc.at_state;
      break;
    case DocKind::geodesic:
      out["geodesic"]["state"] = element_to_rows(doc.first);
      out["geodesic"]["direction"] = element_to_rows(doc.second);
      break;
  }
  return out.dump(2) + "\n";
}

std::string emit_csv(const std::vector<GeodesicSample>& samples,
                     double rank_tol) {
  if (samples.empty()) return "";
  const AlgebraShape& shape = samples.front().density.shape;
  std::size_t dim = 0, entries = 0;
  for (int n : shape.blocks) {
    dim += static_cast<std::size_t>(n);
    entries += static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }

  std::string out = "t,trace,min_eigenvalue,rank";
  for (std::size_t i = 0; i < dim; ++i) out += ",eig_" + std::to_string(i);
  for (std::size_t i = 0; i < entries; ++i) {
    out += ",entry_" + std::to_string(i) + "_re";
    out += ",entry_" + std::to_string(i) + "_im";
  }
  out += "\n";

  for (const GeodesicSample& s : samples) {
    if (!(s.density.shape == shape))
      fail(errc::validation_error, "emit_csv: samples mix algebra shapes");
    std::vector<double> eigs;
    eigs.reserve(dim);
    for (const cmat& blk : s.density.data) {
      Eigen::SelfAdjointEigenSolver<cmat> es(blk, Eigen::EigenvaluesOnly);
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        eigs.push_back(es.eigenvalues()[i]);
    }
    std::sort(eigs.begin(), eigs.end());

    out += num17(s.t);
    out += "," + num17(trace(s.density).real());
    out += "," + num17(eigs.front());
    out += "," + std::to_string(rank_signature(s.density, rank_tol).total());
    for (double e : eigs) out += "," + num17(e);
    for (const cmat& blk : s.density.data)
      for (Eigen::Index r = 0; r < blk.rows(); ++r)
        for (Eigen::Index c = 0; c < blk.cols(); ++c) {
          out += "," + num17(blk(r, c).real());
          out += "," + num17(blk(r, c).imag());
        }
    out += "\n";
  }
  return out;
}

}  // namespace jgeo
