#include <doctest.h>

#include "lefkit/gallery.hpp"
#include "lefkit/report.hpp"

using namespace lefkit;

TEST_CASE("hilbert series serialization") {
  HilbertSeries h(2, {7, 17, 17, 7});
  Json j = to_json(h);
  CHECK(j.dump() == R"({"offset":2,"coeffs":[7,17,17,7]})");
}

TEST_CASE("rationals serialize exactly") {
  Rational q(-3, 2);
  q.canonicalize();
  CHECK(to_json(q).dump() == "\"-3/2\"");
  CHECK(to_json(Rational(5)).dump() == "\"5\"");
}

TEST_CASE("verdict serialization is deterministic and key-ordered") {
  const VariableSet vars({"x", "y"});
  ArtinianAlgebra a = ArtinianAlgebra::build(
      IdealHandle(vars, {parse_polynomial("x^2", vars), parse_polynomial("y^2", vars)}));
  LefschetzVerdict v = find_witness(a, LefschetzProperty::SLP);
  Json j1 = to_json(v, vars);
  Json j2 = to_json(find_witness(a, LefschetzProperty::SLP), vars);
  CHECK(j1.dump(2) == j2.dump(2));
  // Fixed key order: property before status before witness.
  const std::string s = j1.dump();
  CHECK(s.find("\"property\"") < s.find("\"status\""));
  CHECK(s.find("\"status\"") < s.find("\"witness\""));
}

TEST_CASE("extension reports print witnesses in the extended ring") {
  const VariableSet vars({"x", "y"});
  ArtinianAlgebra a = ArtinianAlgebra::build(
      IdealHandle(vars, {parse_polynomial("x^2", vars), parse_polynomial("y^2", vars)}));
  TensorWlpReport r = check_truncated_extension_wlp(a, 2);
  CHECK(r.extension_variable == "u");
  Json j = to_json(r, vars);
  // Serializes without touching out-of-range variable names; forms on the
  // extensions may mention the adjoined variable.
  CHECK(j.dump().find("\"extension_variable\":\"u\"") != std::string::npos);
  for (const auto& w : r.wlp_per_alpha) CHECK(w.is_witness());
}

TEST_CASE("gallery results carry machine-checkable data") {
  GalleryResult r = run_gallery("lemma-6.1-demo");
  CHECK(r.pass());
  CHECK(r.data.contains("decomposition"));
  CHECK_THROWS_AS(run_gallery("example-0.0"), UnknownGalleryName);
  CHECK(gallery_names().size() == 8);
}
