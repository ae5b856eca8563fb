#include <set>

#include "doctest.h"
#include "support.hpp"
#include "vk/catalog.hpp"
#include "vk/error.hpp"
#include "vk/free_knot.hpp"
#include "vk/laurent.hpp"
#include "vk/parity.hpp"
#include "vk/sawollek.hpp"
#include "vk/seifert.hpp"

using namespace vk;

TEST_CASE("every entry parses and validates") {
  std::set<std::string> names;
  for (const std::string& name : catalog_names()) {
    CAPTURE(name);
    CHECK(names.insert(name).second);
    const CatalogEntry& e = catalog_entry(name);
    CHECK(e.name == name);
    CHECK_FALSE(e.notes.empty());
    switch (e.kind) {
      case EntryKind::Gauss:
        CHECK(serialize(parse_gauss_code(e.payload)) == e.payload);
        break;
      case EntryKind::Free:
        CHECK(serialize(parse_free_code(e.payload)) == e.payload);
        break;
      case EntryKind::Surface:
        CHECK(validate(parse_surface_diagram(e.payload)).empty());
        CHECK(serialize(parse_surface_diagram(e.payload)) == e.payload);
        break;
    }
  }
  for (const char* required : {"unknot", "kink", "trefoil", "figure-eight", "virtual-trefoil", "irreducibly-odd",
                               "sawollek-not-invertible", "virtual-trefoil-genus-2"}) {
    CHECK(names.count(required) == 1);
  }
}

TEST_CASE("catalog examples") {
  CHECK(catalog_entry("unknot").payload.empty());
  CHECK(catalog_entry("virtual-trefoil").payload == "O1+,O2+,U1+,U2+");
  GaussDiagram vt = parse_gauss_code(catalog_entry("virtual-trefoil").payload);
  CHECK_FALSE(is_realizable(vt));
  CHECK(odd_writhe(vt) == 2);
  for (const char* name : {"unknot", "kink", "trefoil", "figure-eight"}) {
    GaussDiagram d = parse_gauss_code(catalog_entry(name).payload);
    CHECK(is_realizable(d));
    CHECK(odd_writhe(d) == 0);
    CHECK(normalized_sawollek(d).is_zero());
  }
  CHECK(parse_gauss_code(catalog_entry("trefoil").payload).size() == 3);
  CHECK(parse_gauss_code(catalog_entry("figure-eight").payload).size() == 4);
}

TEST_CASE("search-found entries match their searches") {
  CHECK(is_irreducibly_odd(parse_free_code(catalog_entry("irreducibly-odd").payload)));
  GaussDiagram d = parse_gauss_code(catalog_entry("sawollek-not-invertible").payload);
  CHECK(distinguishes_inverse(d));
  CHECK(normalized_sawollek(d).to_string() ==
        "1*x^0*y^0 + -1*x^0*y^1 + -1*x^2*y^0 + 1*x^2*y^3 + 1*x^3*y^1 + -1*x^3*y^3");
  CHECK(normalized_sawollek(inverse(d)).to_string() ==
        "1*x^0*y^0 + -1*x^0*y^2 + -1*x^1*y^0 + 1*x^1*y^3 + 1*x^3*y^2 + -1*x^3*y^3");
  // No diagram with fewer arrows, and no 3-arrow code that sorts earlier.
  for (int n = 0; n <= 3; ++n) {
    vk::testing::for_each_diagram(n, [&](const GaussDiagram& e) {
      if (!distinguishes_inverse(e)) return;
      CHECK(n == 3);
      CHECK(serialize(e) >= serialize(d));
    });
  }
}

TEST_CASE("genus 2 surface carries the virtual trefoil") {
  SurfaceDiagram sd = parse_surface_diagram(catalog_entry("virtual-trefoil-genus-2").payload);
  CHECK(sd.surface.genus == 2);
  CHECK(diagrams_equal(kappa(sd), parse_gauss_code("O1+,O2+,U1+,U2+")));
  CHECK(sd == add_handle(embed_on_standard_surface(parse_gauss_code("O1+,O2+,U1+,U2+"))));
  CHECK(linking_number(sd) == 0);
}

TEST_CASE("gated and unknown names") {
  for (const char* name : {"khat1", "khat2", "khat3", "khat4", "kishino", "nonesuch"}) {
    CAPTURE(name);
    try {
      catalog_entry(name);
      FAIL("found");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoSuchEntry);
      CHECK(std::string(e.what()).find(name) != std::string::npos);
    }
  }
  CHECK_THROWS_WITH_AS(catalog_entry("khat4"), doctest::Contains("not been transcribed"), Error);
}
