#include "jgeo/io.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "jgeo/sampling.hpp"

using namespace jgeo;
using namespace jgeo::testing;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

errc code_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected the document to be rejected: ", text);
  return errc::validation_error;
}

}  // namespace

TEST_CASE("minimal documents parse") {
  Document doc = parse_document(
      R"({"blocks":[2],"state":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})");
  CHECK(doc.kind == DocKind::state);
  CHECK(doc.shape == AlgebraShape{{2}});
  CHECK(max_abs_diff(doc.as_state().density,
                     diagonal_density(qubit(), {0.5, 0.5})) == 0.0);

  // Two-point distribution: one row per 1x1 block.
  Document ab = parse_document(
      R"({"blocks":[1,1],"state":[[[0.7,0]],[[0.3,0]]]})");
  CHECK(ab.shape.abelian());
  CHECK(ab.as_state()(identity_element(ab.shape)) == doctest::Approx(1.0));
  CHECK(ab.as_state().density.data[0](0, 0).real() == 0.7);

  // The nested shape spelling is equivalent.
  Document nested = parse_document(
      R"({"algebra":{"blocks":[2]},"element":[[[0,0],[1,0]],[[1,0],[0,0]]]})");
  CHECK(max_abs_diff(nested.as_element(), sigma_x()) == 0.0);
}

TEST_CASE("emit and parse round-trip exactly") {
  Rng rng(601);
  AlgebraShape shape{{2, 3}};

  Element x = random_self_adjoint(rng, shape);
  // Make it properly complex and non-self-adjoint.
  x.data[1](0, 2) += cplx(0.125, -3.75);
  Document back = parse_document(emit(element_document(x)));
  CHECK(back.kind == DocKind::element);
  CHECK(max_abs_diff(back.as_element(), x) == 0.0);

  StateFunctional rho = StateFunctional::from_density(random_density(rng, shape));
  CHECK(max_abs_diff(parse_document(emit(state_document(rho))).as_state().density,
                     rho.density) == 0.0);

  TangentVector v = gradient_vec(rho, random_self_adjoint(rng, shape));
  TangentVector v_back = parse_document(emit(tangent_document(v))).as_tangent();
  CHECK(v_back.at_state);
  CHECK(max_abs_diff(v_back.value, v.value) == 0.0);
  CHECK(max_abs_diff(v_back.base, v.base) == 0.0);

  // Cone tangents keep their flag and skip the traceless requirement.
  PositiveFunctional omega =
      PositiveFunctional::from_density(2.0 * random_density(rng, shape));
  TangentVector w = tangent_at(omega, random_self_adjoint(rng, shape));
  TangentVector w_back = parse_document(emit(tangent_document(w))).as_tangent();
  CHECK_FALSE(w_back.at_state);
  CHECK(max_abs_diff(w_back.value, w.value) == 0.0);

  Document geo = parse_document(
      emit(geodesic_document(rho, random_self_adjoint(rng, shape))));
  CHECK(geo.kind == DocKind::geodesic);
  CHECK(geo.has_second);
  CHECK(max_abs_diff(geo.first, rho.density) == 0.0);

  // Emitting twice gives byte-identical text.
  CHECK(emit(state_document(rho)) == emit(state_document(rho)));
}

TEST_CASE("value-level failures name the field") {
  auto expect_validation = [](const std::string& text, const char* needle) {
    try {
      parse_document(text);
      FAIL("expected rejection: ", text);
    } catch (const error& e) {
      CHECK(e.code() == errc::validation_error);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_validation(
      R"({"blocks":[2],"state":[[[0.9,0],[0,0]],[[0,0],[0.5,0]]]})", "state");
  expect_validation(
      R"({"blocks":[2],"state":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]})", "state");
  expect_validation(
      R"({"blocks":[2],"tangent":{"base":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]],)"
      R"("value":[[[1,0],[0,0]],[[0,0],[1,0]]]}})",
      "tangent");
  expect_validation(
      R"({"blocks":[2],"geodesic":{"state":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]],)"
      R"("direction":[[[0,0],[1,0]],[[0,0],[0,0]]]}})",
      "geodesic.direction");
}

TEST_CASE("structural failures are schema errors") {
  const std::string rows = R"([[[0.5,0],[0,0]],[[0,0],[0.5,0]]])";
  CHECK(code_of("{") == errc::schema_error);
  CHECK(code_of("[1,2]") == errc::schema_error);
  CHECK(code_of(R"({"state":)" + rows + "}") == errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"algebra":{"blocks":[2]},"state":)" + rows +
                "}") == errc::schema_error);
  CHECK(code_of(R"({"blocks":[2]})") == errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"state":)" + rows + R"(,"element":)" + rows +
                "}") == errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"state":)" + rows + R"(,"notes":"hi"})") ==
        errc::schema_error);
  CHECK(code_of(R"({"blocks":[0],"state":)" + rows + "}") == errc::schema_error);
  CHECK(code_of(R"({"blocks":[],"state":)" + rows + "}") == errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"state":[[[0.5,0],[0,0]]]})") ==
        errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"state":[[[0.5,0]],[[0,0],[0.5,0]]]})") ==
        errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"state":[[[0.5],[0,0]],[[0,0],[0.5,0]]]})") ==
        errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"state":[[["x",0],[0,0]],[[0,0],[0.5,0]]]})") ==
        errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"tangent":{"base":)" + rows + "}}") ==
        errc::schema_error);
  CHECK(code_of(R"({"blocks":[2],"tangent":{"base":)" + rows + R"(,"value":)" +
                rows + R"(,"at_state":1}})") == errc::schema_error);
  CHECK(code_of(R"({"algebra":{"blocks":[2],"name":"M2"},"state":)" + rows +
                "}") == errc::schema_error);
}

TEST_CASE("geodesic csv table") {
  // One mixed and one pure sample; the pure row must flag the rank drop.
  Element mixed = diagonal_density(qubit(), {0.75, 0.25});
  Element third = diagonal_density(qubit(), {1.0 / 3.0, 2.0 / 3.0});
  std::vector<GeodesicSample> samples = {{0.0, mixed}, {0.5, ket0_density()},
                                         {1.0, third}};
  std::string table = emit_csv(samples);
  std::vector<std::string> lines = split(table, '\n');
  REQUIRE(lines.size() == 5);  // header + 3 rows + trailing newline
  CHECK(lines[4].empty());

  CHECK(lines[0] ==
        "t,trace,min_eigenvalue,rank,eig_0,eig_1,"
        "entry_0_re,entry_0_im,entry_1_re,entry_1_im,"
        "entry_2_re,entry_2_im,entry_3_re,entry_3_im");

  auto row0 = split(lines[1], ',');
  REQUIRE(row0.size() == 3 + 1 + 2 + 8);  // the documented column count
  CHECK(std::stod(row0[0]) == 0.0);
  CHECK(std::stod(row0[1]) == 1.0);
  CHECK(std::stod(row0[2]) == 0.25);  // eigenvalues ascending, min first
  CHECK(row0[3] == "2");
  CHECK(std::stod(row0[4]) == 0.25);
  CHECK(std::stod(row0[5]) == 0.75);
  CHECK(std::stod(row0[6]) == 0.75);  // entry (0,0) re
  CHECK(std::stod(row0[7]) == 0.0);
  CHECK(std::stod(row0[12]) == 0.25);  // entry (1,1) re

  auto row1 = split(lines[2], ',');
  CHECK(std::stod(row1[0]) == 0.5);
  CHECK(row1[3] == "1");
  CHECK(std::stod(row1[2]) == 0.0);

  // 17 significant digits survive the decimal round trip.
  auto row2 = split(lines[3], ',');
  CHECK(std::stod(row2[6]) == 1.0 / 3.0);
  CHECK(row2[6] == "0.33333333333333331");

  CHECK(emit_csv({}) == "");
  CHECK(emit_csv(samples) == table);
}
