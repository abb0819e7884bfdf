#include "rotlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace rotlab {

namespace {

double sig15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json positions(const std::vector<std::pair<int, int>>& v) {
  Json out = Json::array();
  for (const auto& [i, j] : v) out.push_back({i, j});
  return out;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto simple = [](const Json& v) { return !v.is_object() && !v.is_array(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (simple(v)) {
        os << pad << k << ": " << scalar(v) << "\n";
      } else if (v.empty()) {
        os << pad << k << ": " << (v.is_array() ? "[]" : "{}") << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && simple(v);
    if (flat) {
      os << pad;
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar(j[i]);
      os << "\n";
      return;
    }
    for (const auto& v : j) {
      if (simple(v)) {
        os << pad << "- " << scalar(v) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

Json to_json(const Word& w) { return w.str(); }

Json to_json(const GroupSpec& s) {
  Json j{{"family", family_name(s.family)}, {"label", s.str()}};
  switch (s.family) {
    case Family::Gnm:
      j["p"] = s.p;
      j["q"] = s.q;
      j["n"] = s.n;
      j["m"] = s.m;
      break;
    case Family::Gpq:
      j["p"] = s.p;
      j["q"] = s.q;
      break;
    case Family::HatG:
      j["m"] = s.m;
      break;
  }
  j["alphabet"] = s.alphabet();
  return j;
}

Json to_json(const ExactMat3& m) {
  Json exact = Json::array(), numeric = Json::array();
  auto g = m.grid();
  auto x = m.numeric();
  for (int i = 0; i < 3; ++i) {
    exact.push_back({g[i][0], g[i][1], g[i][2]});
    numeric.push_back({sig15(x[i][0]), sig15(x[i][1]), sig15(x[i][2])});
  }
  return {{"conductor", m.conductor()}, {"exact", exact}, {"numeric", numeric}};
}

Json to_json(const Presentation& p) {
  Json rel = Json::array(), gens = Json::object();
  for (const auto& r : p.relators) rel.push_back(r.str());
  for (const auto& [name, sym] : p.table.entries()) gens[name] = sym.str();
  return {{"generators", p.generators}, {"relators", rel}, {"bindings", gens}};
}

Json to_json(const StructureReport& r) {
  Json j{{"input", to_json(r.input)},
         {"canonical", to_json(r.canonical.spec)},
         {"canonical_changes", r.canonical.changes},
         {"case_id", r.case_name()},
         {"structure", r.structure},
         {"finite", r.kase == Case::Finite}};
  j["order"] = r.order ? Json(*r.order) : Json(nullptr);
  j["witness"] = r.witness ? Json(r.witness->str()) : Json(nullptr);
  if (r.amalgam) {
    j["amalgam"] = {{"left", r.amalgam->left},
                    {"right", r.amalgam->right},
                    {"common", r.amalgam->common},
                    {"left_generators", r.amalgam->left_generators},
                    {"right_generators", r.amalgam->right_generators},
                    {"common_generators", r.amalgam->common_generators}};
  } else {
    j["amalgam"] = nullptr;
  }
  Json d = Json::object();
  for (const auto& [k, v] : r.derived) d[k] = v;
  j["derived"] = d;
  return j;
}

Json to_json(const Expression& e) {
  return {{"target", e.target}, {"rotation", e.rotation.str()}, {"word", e.word.str()}};
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"status", c.status}, {"detail", c.detail}};
    if (c.offending) j["offending"] = to_json(*c.offending);
    checks.push_back(j);
  }
  return {{"spec", to_json(r.spec)}, {"all_pass", r.all_pass()}, {"checks", checks}};
}

Json to_json(const IdentityVerdict& v) { return {{"identity", v.identity}, {"method", v.method}}; }

Json to_json(const NormalFormReport& r) {
  return {{"input", to_json(r.input)},         {"working", to_json(r.working)},
          {"method", r.method},                {"canonical_word", r.canonical_word.str()},
          {"normal_form", r.normal_form.str()}, {"identity", r.identity}};
}

Json to_json(const RewriteTrace& t) {
  Json out = Json::array();
  for (const auto& s : t.steps)
    out.push_back({{"rule", s.rule}, {"result", s.result.str()}, {"syllables", s.syllables}, {"quarter_ts", s.quarter_ts}});
  return out;
}

Json to_json(const NonIdentityWitness& w) {
  return {{"word", w.word.str()},
          {"variant", variant_name(w.variant)},
          {"matrix", to_json(w.matrix)},
          {"non_rational", positions(w.non_rational)},
          {"non_integral", positions(w.non_integral)},
          {"seconds", w.seconds}};
}

Json to_json(const FreeCertificate& c) {
  return {{"input", c.input.str()},
          {"substituted", c.substituted.str()},
          {"input_length", c.input.letter_length()},
          {"substituted_length", c.substituted.letter_length()},
          {"variant", variant_name(c.variant)},
          {"witness", to_json(c.witness)}};
}

Json to_json(const BatchSummary& b) {
  return {{"name", b.name},
          {"words", b.words},
          {"certified", b.certified},
          {"failures", b.failures},
          {"four_non_integral", b.four_non_integral},
          {"failure_examples", b.failure_examples},
          {"ok", b.ok()},
          {"seconds", b.seconds}};
}

Json to_json(const BallReport& b) {
  Json j{{"label", b.label},     {"generators", b.generators}, {"counts", b.counts},
         {"closed", b.closed},   {"truncated", b.truncated},   {"seconds", b.seconds}};
  j["closed_at"] = b.closed_at ? Json(*b.closed_at) : Json(nullptr);
  j["order"] = b.order ? Json(*b.order) : Json(nullptr);
  j["hash"] = {{"distinct_hashes", b.hash.distinct_hashes},
               {"collisions", b.hash.collisions},
               {"merges_verified", b.hash.merges_verified}};
  return j;
}

Json to_json(const GrowthComparison& g) {
  return {{"spec", to_json(g.spec)},
          {"case_id", g.case_name},
          {"oracle", g.oracle},
          {"matrix_counts", g.ball.counts},
          {"oracle_counts", g.oracle_counts},
          {"matches", g.matches},
          {"all_match", g.all_match()},
          {"ball", to_json(g.ball)}};
}

Json to_json(const AmalgamNormalForm& nf) {
  Json pieces = Json::array();
  for (const auto& p : nf.pieces) pieces.push_back({{"factor", p.factor == 0 ? "left" : "right"}, {"word", p.word.str()}});
  return {{"h", nf.h_word.str()}, {"pieces", pieces}, {"identity", nf.is_identity()}};
}

Json make_document(const std::string& command, Json inputs, Json result, std::vector<std::string> diagnostics) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"result", std::move(result)},
          {"diagnostics", std::move(diagnostics)}};
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

std::string ball_csv(const BallReport& b) {
  std::ostringstream os;
  os << "radius,count\n";
  for (std::size_t r = 0; r < b.counts.size(); ++r) os << r << "," << b.counts[r] << "\n";
  return os.str();
}

}  // namespace rotlab
