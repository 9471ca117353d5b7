#include <doctest.h>

#include <json.hpp>

#include "gamma0fd/report.hpp"
#include "gamma0fd/verify.hpp"

using namespace gamma0fd;
using nlohmann::ordered_json;

namespace {

void check_roundtrip(const std::string& doc) {
  CHECK(ordered_json::parse(doc).dump() == doc);
}

}  // namespace

TEST_CASE("documents round-trip byte-identically and carry the schema field") {
  const coset_table t = build_cosets(modulus(12));
  for (const std::string& doc :
       {width_json(modulus(12)), cosets_json(t), cusps_json(t), arcs_json(t),
        gluing_json(t), genus_json(t)}) {
    check_roundtrip(doc);
    const auto parsed = ordered_json::parse(doc);
    CHECK(parsed.at("schema") == 1);
    CHECK(parsed.at("n") == 12);
    CHECK(doc.rfind("{\"n\":12,", 0) == 0);  // "n" leads every document
  }
}

TEST_CASE("width document content") {
  const auto doc = ordered_json::parse(width_json(modulus(6)));
  CHECK(doc.at("psi") == 12);
  bool found = false;
  for (const auto& e : doc.at("entries"))
    if (e.at("j") == 5) {
      found = true;
      CHECK(e.at("W") == 4);
      CHECK(e.at("M") == 3);
    }
  CHECK(found);
}

TEST_CASE("coset document content") {
  const auto doc = ordered_json::parse(cosets_json(build_cosets(modulus(2))));
  REQUIRE(doc.at("reps").size() == 3);
  CHECK(doc.at("reps")[0].at("type") == "I");
  CHECK(doc.at("reps")[0].at("i") == 0);
  CHECK(doc.at("reps")[2].at("type") == "J");
  CHECK(doc.at("reps")[2].at("j") == 0);
  CHECK(doc.at("reps")[2].at("m") == 0);
  CHECK(doc.at("reps")[2].at("word") == "SS");
}

TEST_CASE("cusp document content at level 12") {
  const auto doc = ordered_json::parse(cusps_json(build_cosets(modulus(12))));
  REQUIRE(doc.at("classes").size() == 6);
  i64 width_total = 0;
  for (const auto& c : doc.at("classes")) width_total += c.at("width").get<i64>();
  CHECK(width_total == 24);
  const auto& first = doc.at("classes")[0];
  CHECK(first.at("d") == 1);
  CHECK(first.at("width") == 12);
  CHECK(first.at("members").size() == 12);
}

TEST_CASE("genus document content") {
  const auto doc = ordered_json::parse(genus_json(build_cosets(modulus(12))));
  CHECK(doc.at("genus") == 0);
  CHECK(doc.at("faces") == 24);
  CHECK(doc.at("edges") == 48);
  CHECK(doc.at("vertices") == 26);
}

TEST_CASE("gluing document lists the rays separately") {
  const auto doc = ordered_json::parse(gluing_json(build_cosets(modulus(12))));
  CHECK(doc.at("pairs").size() == 12);
  CHECK(doc.at("rays").at("arcs").size() == 2);
  const auto t_mat = doc.at("rays").at("identified_by");
  CHECK(t_mat[0][0] == 1);
  CHECK(t_mat[0][1] == 1);
  CHECK(t_mat[1][0] == 0);
  CHECK(t_mat[1][1] == 1);
}

TEST_CASE("verify reports") {
  const verify_report good = verify_modulus(12);
  CHECK(good.ok);
  CHECK(good.genus == 0);
  const std::string line = verify_line_json(good);
  check_roundtrip(line);
  CHECK(ordered_json::parse(line).at("ok") == true);

  // determinism across repeated runs
  CHECK(verify_line_json(verify_modulus(12)) == line);
}
