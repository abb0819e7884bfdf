#include "rotlab/report.hpp"

#include <doctest.h>

using namespace rotlab;

TEST_SUITE("report") {
  TEST_CASE("document envelope") {
    Json d = make_document("classify", {{"spec", "x"}}, to_json(classify(GroupSpec::gnm(3, 5, 1, 7))));
    CHECK(d["schema_version"] == kSchemaVersion);
    CHECK(d["command"] == "classify");
    CHECK(d["result"]["case_id"] == "Thm3.free");
    CHECK(d["diagnostics"].is_array());
    CHECK(Json::parse(d.dump()) == d);
    CHECK(render_text(d).find("case_id: Thm3.free") != std::string::npos);
  }

  TEST_CASE("matrices carry exact entries that re-parse") {
    ExactMat3 r = rot(Axis::ell(1, 5), 1, 7);
    Json j = to_json(r);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        CycloElem e = CycloElem::parse(j["exact"][i][k].get<std::string>());
        CHECK(e == r.entry(i, k));
      }
  }

  TEST_CASE("printed words re-parse") {
    StructureReport s = classify(GroupSpec::gnm(2, 2, 1, 12));
    for (const auto& w : to_json(*s.presentation)["relators"]) {
      Word x = Word::parse(w.get<std::string>());
      CHECK(x.str() == w.get<std::string>());
    }
    for (const auto& e : express_generators(GroupSpec::gnm(4, 4, 1, 8))) {
      Json j = to_json(e);
      CHECK(Word::parse(j["word"].get<std::string>()) == e.word);
    }
  }

  TEST_CASE("ball csv") {
    BallReport b = bfs_ball(GroupSpec::gpq(5, 1), 3, 100);
    CHECK(ball_csv(b) == "radius,count\n0,1\n1,3\n2,5\n3,5\n");
  }
}
