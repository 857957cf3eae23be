#include <doctest.h>

#include <fstream>

#include "schema_check.hpp"
#include "tc/certificate.hpp"

using namespace tc;

namespace {

nlohmann::json load_schema() {
  std::ifstream in(TC_SOURCE_DIR "/docs/report-schema.json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("report json matches the published schema") {
  const auto sch = load_schema();
  std::string why;
  for (const auto& rep :
       {reproduce_example3(), kunneth_scan(4), certify(3, 3), genus_reduction_check(2, 4)}) {
    CAPTURE(rep.command);
    INFO(why);
    CHECK(schema::validate(sch, nlohmann::json::parse(rep.to_json(true)), &why));
    CHECK(schema::validate(sch, nlohmann::json::parse(rep.to_json(false)), &why));
  }
}

TEST_CASE("report json carries the report fields") {
  const auto rep = certify(3, 3);
  const auto j = nlohmann::json::parse(rep.to_json(true));
  CHECK(j["command"] == "certify");
  CHECK(j["n"] == 3);
  CHECK(j["g"] == 3);
  CHECK(j["verdict"] == to_string(rep.verdict));
  CHECK(j["counts"]["ez_terms"] == rep.ez_terms);
  CHECK(j["counts"]["aw_terms"] == rep.aw_terms);
  CHECK(j["counts"]["kunneth_terms"] == rep.kunneth_terms);
  CHECK(j["verified_m"] == rep.verified_m);
  CHECK(j["kunneth_survivors"].size() == rep.kunneth_survivors.size());
  REQUIRE(j["subreports"].size() == rep.subreports.size());
  CHECK(j["subreports"][0]["command"] == rep.subreports[0].command);
  CHECK(j.contains("stages"));
  CHECK(j["subreports"][0].contains("stages"));

  const auto bare = nlohmann::json::parse(rep.to_json(false));
  CHECK_FALSE(bare.contains("stages"));
  CHECK_FALSE(bare["subreports"][0].contains("stages"));

  const auto g2 = nlohmann::json::parse(rep.subreports.back().to_json(true));
  REQUIRE(g2["residues"].size() == rep.subreports.back().residues.size());
  CHECK(g2["residues"][0]["m"] == 1);
  CHECK(g2["residues"][0]["nonzero"] == false);
  CHECK(g2["wedge_invariance"].size() == 4);
}

TEST_CASE("the schema validator rejects malformed reports") {
  const auto sch = load_schema();
  auto j = nlohmann::json::parse(reproduce_example3().to_json(false));
  CHECK(schema::validate(sch, j));

  auto bad_verdict = j;
  bad_verdict["verdict"] = "maybe";
  CHECK_FALSE(schema::validate(sch, bad_verdict));

  auto missing = j;
  missing.erase("residues");
  CHECK_FALSE(schema::validate(sch, missing));

  auto extra = j;
  extra["flavour"] = "lemon";
  CHECK_FALSE(schema::validate(sch, extra));

  auto wrong_type = j;
  wrong_type["n"] = "three";
  CHECK_FALSE(schema::validate(sch, wrong_type));

  auto bad_nested = j;
  bad_nested["counts"]["ez_terms"] = true;
  CHECK_FALSE(schema::validate(sch, bad_nested));

  auto bad_sub = j;
  bad_sub["subreports"].push_back(nlohmann::json::object());
  CHECK_FALSE(schema::validate(sch, bad_sub));
}

TEST_CASE("report text rendering") {
  const auto rep = certify(3, 3);
  const auto text = rep.to_text();
  CHECK(text.find("certify (n=3, g=3): verified") == 0);
  CHECK(text.find("certify_g2") != std::string::npos);
  CHECK(text.find("coinvariant residue m=3") != std::string::npos);
  CHECK(text.find("certified at quotient m=4") != std::string::npos);
  CHECK(text.find("kunneth survivors: a1*b1 b1*a1") != std::string::npos);
  CHECK(text.find("time ") != std::string::npos);

  Example3Options drop;
  drop.corrupt = Example3Options::Corrupt::drop_term;
  const auto bad = reproduce_example3(drop).to_text();
  CHECK(bad.find("note: stage (i)") != std::string::npos);
}
