#include "fforest/io.hpp"

#include "doctest.h"
#include "fforest/errors.hpp"
#include "fforest/verify.hpp"
#include "fforest/zoo.hpp"

using namespace fforest;
using nlohmann::json;

TEST_CASE("semigroup documents round-trip") {
  const Semigroup s = rectangular_band(2, 3);
  const json doc = semigroup_to_json(s);
  const Semigroup back = semigroup_from_json(doc);
  CHECK(back == s);
  CHECK(semigroup_to_json(back).dump() == doc.dump());
}

TEST_CASE("semigroup documents reject unknown keys and bad tables") {
  json doc = semigroup_to_json(cyclic_group(2));
  doc["extra"] = 1;
  CHECK_THROWS_AS(semigroup_from_json(doc), ParseError);

  json bad = semigroup_to_json(cyclic_group(2));
  bad["table"][0][1] = 9;
  CHECK_THROWS_AS(semigroup_from_json(bad), ParseError);

  json missing = json{{"name", "x"}, {"elements", json::array({"a"})}};
  CHECK_THROWS_AS(semigroup_from_json(missing), ParseError);
}

TEST_CASE("homomorphism documents") {
  json doc{{"semigroup", semigroup_to_json(cyclic_group(2))},
           {"alphabet", json{{"g", "g"}}}};
  const Homomorphism phi = homomorphism_from_json(doc, ".");
  CHECK(phi.image("gg") == 0);

  json unknown = doc;
  unknown["alphabet"]["q"] = "nope";
  CHECK_THROWS_AS(homomorphism_from_json(unknown, "."), ParseError);

  json long_letter = doc;
  long_letter["alphabet"] = json{{"gg", "g"}};
  CHECK_THROWS_AS(homomorphism_from_json(long_letter, "."), ParseError);

  json extra = doc;
  extra["note"] = "hi";
  CHECK_THROWS_AS(homomorphism_from_json(extra, "."), ParseError);

  const json round = homomorphism_to_json(phi);
  CHECK(homomorphism_from_json(round, ".") == phi);
}

TEST_CASE("forest documents round-trip bit-identically") {
  for (const ZooEntry& entry : standard_zoo()) {
    const Homomorphism& phi = entry.hom;
    const GreenData green = compute_green(phi.semigroup());
    const std::size_t k = phi.alphabet().size();
    for (std::size_t len = 1; len <= 3; ++len) {
      std::vector<std::size_t> digits(len, 0);
      std::string w(len, phi.alphabet()[0]);
      while (true) {
        for (std::size_t p = 0; p < len; ++p) w[p] = phi.alphabet()[digits[p]];
        const FactTree tree = build_forest(phi, green, w);
        const json doc = forest_to_json(tree, phi, green);
        const FactTree parsed = forest_from_json(doc, phi);
        CHECK(verify_valid(parsed, phi, green, w).valid);
        CHECK(forest_to_json(parsed, phi, green).dump() == doc.dump());
        std::size_t p = 0;
        while (p < len && ++digits[p] == k) digits[p++] = 0;
        if (p == len) break;
      }
    }
  }
}

TEST_CASE("forest document shape") {
  Homomorphism phi(cyclic_group(2), {{'g', 1}});
  const GreenData green = compute_green(phi.semigroup());
  const FactTree tree = build_forest(phi, green, "gg");
  const json doc = forest_to_json(tree, phi, green);
  CHECK(doc["word"] == "gg");
  CHECK(doc["height"] == 1);
  CHECK(doc["bound"] == 6);
  CHECK(doc["image"] == "e");
  CHECK(doc["idempotent"] == true);
  REQUIRE(doc["children"].size() == 2);
  CHECK(doc["children"][0]["letter"] == "g");
  CHECK(doc["children"][0]["image"] == "g");
}

TEST_CASE("forest parse rejects malformed nodes") {
  Homomorphism phi(cyclic_group(2), {{'g', 1}});
  const GreenData green = compute_green(phi.semigroup());
  const json good = forest_to_json(build_forest(phi, green, "gg"), phi, green);

  json unknown = good;
  unknown["children"][0]["typo"] = 1;
  CHECK_THROWS_AS(forest_from_json(unknown, phi), ParseError);

  json bad_name = good;
  bad_name["children"][0]["image"] = "zz";
  CHECK_THROWS_AS(forest_from_json(bad_name, phi), ParseError);

  json both = good;
  both["children"][0]["children"] = json::array({json{{"letter", "g"},
                                                      {"image", "g"}}});
  CHECK_THROWS_AS(forest_from_json(both, phi), ParseError);

  // an invalid tree is still parseable; the verifier decides
  json three = good;
  three["children"] = json::array();
  for (int i = 0; i < 3; ++i) {
    three["children"].push_back(json{{"letter", "g"}, {"image", "g"}});
  }
  three["word"] = "ggg";
  three["image"] = "g";
  const FactTree parsed = forest_from_json(three, phi);
  CHECK_FALSE(verify_valid(parsed, phi, green, "ggg").valid);
}

TEST_CASE("verify report document") {
  Homomorphism phi(cyclic_group(2), {{'g', 1}});
  const GreenData green = compute_green(phi.semigroup());
  const FactTree tree = build_forest(phi, green, "gggg");
  const VerifyReport rep = verify_valid(tree, phi, green, "gggg");
  const json doc = verify_report_to_json(rep);
  CHECK(doc["valid"] == true);
  CHECK(doc["yield_ok"] == true);
  CHECK(doc["within_bound"] == true);
  CHECK(doc["violations"].empty());
}

TEST_CASE("eggbox document for the flip-flop") {
  Semigroup ff("flipflop", {"1", "a", "b"}, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
  const GreenData green = compute_green(ff);
  const json doc = eggbox_to_json(ff, green);
  REQUIRE(doc["j_classes"].size() == 2);
  // first J-class is the identity's singleton, a 1x1 group cell
  CHECK(doc["j_classes"][0]["h_size"] == 1);
  CHECK(doc["j_classes"][0]["group_h"] == json::array({json::array({true})}));
  // the {a, b} class: one R-class, two L-classes, both cells groups
  CHECK(doc["j_classes"][1]["r_classes"].size() == 1);
  CHECK(doc["j_classes"][1]["l_classes"].size() == 2);
  CHECK(doc["j_classes"][1]["group_h"] ==
        json::array({json::array({true, true})}));
}

TEST_CASE("dot emission mentions every node") {
  Homomorphism phi(cyclic_group(2), {{'g', 1}});
  const GreenData green = compute_green(phi.semigroup());
  const FactTree tree = build_forest(phi, green, "gg");
  const std::string dot = forest_to_dot(tree, phi.semigroup());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);

  const std::string hasse = j_order_to_dot(phi.semigroup(), green);
  CHECK(hasse.find("J0") != std::string::npos);
}
