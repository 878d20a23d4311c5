#include "doctest.h"
#include "support.hpp"
#include "symref/report.hpp"

using namespace symref;

namespace {

ReflectionParameter parameter(std::initializer_list<int> v) {
  ReflectionParameter c;
  std::size_t k = 0;
  for (int x : v) c[k++] = x;
  return c;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("facts report") {
    const auto r = facts_report(support::model());
    CHECK(r.exit_code == kExitOk);
    CHECK(r.body["order"] == 32);
    CHECK(r.body["class_count"] == 17);
    CHECK(r.body["center_size"] == 2);
    CHECK(r.body["abelianization_order"] == 16);
    CHECK(r.body["preserves_form"] == true);
    CHECK(r.body["reflection_classes"].size() == 5);
    CHECK(r.body["reflection_classes"][0]["representative"] ==
          "[[0,-1*i,0,0],[1*i,0,0,0],[0,0,0,1*i],[0,0,-1*i,0]]");
    CHECK(r.body["provenance"] == "computed");
    CHECK(r.body["paper_reference"]["reflection_class_count"] == 5);
    CHECK(r.body.contains("meta"));
  }

  TEST_CASE("chartable report") {
    const auto r = chartable_report(support::model());
    CHECK(r.exit_code == kExitOk);
    CHECK(r.body["rows"].size() == 17);
    CHECK(r.body["classes"].size() == 17);
    CHECK(r.body["verification"]["dim_square_sum"] == 32);
    CHECK(r.body["rows"][16]["name"] == "V");
  }

  TEST_CASE("smooth and leaves reports") {
    const auto& m = support::model();
    const auto ones = smooth_report(m, parameter({1, 1, 1, 1, 1}));
    CHECK(ones.body["verdict"] == "Smooth");
    CHECK(ones.exit_code == kExitOk);
    CHECK(ones.body["one_dim_check_agrees"] == true);
    CHECK(ones.body["parameter"]["R3"] == "1");

    const auto zero = smooth_report(m, parameter({0, 0, 0, 0, 0}));
    CHECK(zero.body["verdict"] == "Singular");
    CHECK(zero.exit_code == kExitSingular);
    CHECK(zero.body["hyperplanes_hit"].size() == 21);
    CHECK(zero.body["one_dim_representations"].size() == 16);

    const auto leaves = leaves_report(m, parameter({0, 0, 0, 0, 0}));
    CHECK(leaves.body["two_dim_leaves"] == 5);
    CHECK(leaves.exit_code == kExitOk);
    const auto one = leaves_report(m, parameter({0, 1, 1, 1, 1}));
    CHECK(one.body["two_dim_leaves"] == 1);
    CHECK(one.body["vanishing_coordinates"] == Json::array({"R1"}));
  }

  TEST_CASE("reports do not depend on the worker count") {
    const auto& m = support::model();
    CHECK(strip_meta(hp0_report(m, 8, 1).body) == strip_meta(hp0_report(m, 8, 3).body));
    CHECK(strip_meta(aut_report(m, kDefaultAutSearchCap, 1).body) ==
          strip_meta(aut_report(m, kDefaultAutSearchCap, 4).body));
  }

  TEST_CASE("hp0 report carries the quoted values beside the computed ones") {
    const auto r = hp0_report(support::model(), 8, 2);
    CHECK(r.body["paper_reference"]["dim_hp0"] == 10);
    CHECK(r.body["paper_reference"]["invertible_class_count"] == 10);
    CHECK(r.body["per_degree"].size() == 9);
    CHECK(r.body["matches_paper"] == (r.body["cumulative_hp0"] == 10));
    CHECK(r.body["status"] == (r.body["stabilized"] == true ? "conclusive" : "inconclusive"));
  }

  TEST_CASE("molien report") {
    const auto r = molien_report(support::model(), 8);
    CHECK(r.body["dims"] == Json::array({1, 0, 0, 0, 5, 0, 4, 0, 15}));
  }

  TEST_CASE("strip_meta and text rendering") {
    Json j = {{"a", 1}, {"meta", {{"elapsed_ms", 3}}}, {"b", {{"meta", 2}, {"c", {1, 2}}}}, {"d", Json::array({{{"x", "y"}}})}};
    const auto s = strip_meta(j);
    CHECK_FALSE(s.contains("meta"));
    CHECK_FALSE(s["b"].contains("meta"));
    CHECK(render_text(s) == "a: 1\nb.c: [1,2]\nd[0].x: y\n");
  }
}
