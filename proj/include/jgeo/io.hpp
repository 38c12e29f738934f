#pragma once

// JSON documents for algebras, elements, states, tangents and geodesic
// fixtures, plus the CSV table the geodesic sampler writes. One document
// carries one value; complex entries are [re, im] pairs and rows are listed
// block by block (row-major inside each block). Parsing is strict: unknown
// fields are schema errors, value-level problems (non-state densities,
// non-self-adjoint directions) are validation errors, both with the
// offending field named.

#include <string>
#include <vector>

#include "jgeo/orbits.hpp"

namespace jgeo {

enum class DocKind { element, state, tangent, geodesic };

struct Document {
  std::string schema_version;  // as parsed; emit always writes "1"
  DocKind kind = DocKind::element;
  AlgebraShape shape;
  Element first;   // element | state | tangent base | geodesic state
  Element second;  // tangent value | geodesic direction
  bool has_second = false;
  bool at_state = true;  // tangent only: base taken as state or as positive

  Element as_element() const;          // requires kind element
  StateFunctional as_state() const;    // requires kind state
  TangentVector as_tangent() const;    // requires kind tangent
};

// Accepts the shape either as top-level "blocks" or as "algebra":{"blocks"}.
Document parse_document(const std::string& text);

Document element_document(const Element& x);
Document state_document(const StateFunctional& rho);
Document tangent_document(const TangentVector& v);
Document geodesic_document(const StateFunctional& rho, const Element& direction);

// Canonical text: schema_version, algebra.blocks, then the payload record.
// parse(emit(x)) reproduces x to exact floating-point equality.
std::string emit(const Document& doc);

struct GeodesicSample {
  double t;
  Element density;
};

// Fixed header, one row per sample: t, trace, min_eigenvalue, rank, then the
// eigenvalues ascending, then entries row-major with re/im interleaved.
// Numbers carry 17 significant digits so they round-trip as doubles.
std::string emit_csv(const std::vector<GeodesicSample>& samples,
                     double rank_tol = 1e-12);

}  // namespace jgeo
