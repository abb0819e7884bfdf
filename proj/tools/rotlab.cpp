#include "rotlab/amalgam.hpp"
#include "rotlab/certify.hpp"
#include "rotlab/errors.hpp"
#include "rotlab/explore.hpp"
#include "rotlab/groups.hpp"
#include "rotlab/normalform.hpp"
#include "rotlab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace rotlab;

namespace {

enum Exit { kOk = 0, kUsage = 1, kHypothesis = 2, kInternal = 3 };

struct SpecFlags {
  std::vector<long long> gnm, gpq;
  long long hatg = 0;

  void attach(CLI::App* app) {
    app->add_option("--gnm", gnm, "G_{n/m}(p,q): p q n m")->expected(4)->allow_extra_args(false);
    app->add_option("--gpq", gpq, "G(p,q): p q")->expected(2)->allow_extra_args(false);
    app->add_option("--hatg", hatg, "Ghat(m,4): m");
  }

  GroupSpec resolve() const {
    int given = !gnm.empty() + !gpq.empty() + (hatg != 0);
    if (given != 1) throw UsageError("give exactly one of --gnm P Q N M, --gpq P Q, --hatg M");
    if (!gnm.empty()) return GroupSpec::gnm(gnm[0], gnm[1], gnm[2], gnm[3]);
    if (!gpq.empty()) return GroupSpec::gpq(gpq[0], gpq[1]);
    return GroupSpec::hatg(hatg);
  }
};

struct Outcome {
  Json inputs = Json::object();
  Json result;
  std::vector<std::string> diagnostics;
  int code = kOk;
};

Word parse_in(const GroupSpec& spec, const std::string& text) {
  Word w = Word::parse(text);
  check_alphabet(spec, w);
  return w;
}

void progress(const std::string& line) { std::cerr << line << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for two-generator rotation groups in SO(3)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::function<Outcome()> run;
  SpecFlags spec_flags;
  std::string word;

  auto* classify_cmd = app.add_subcommand("classify", "Classify the group and report its structure");
  spec_flags.attach(classify_cmd);
  bool with_presentation = false, with_express = false;
  classify_cmd->add_flag("--presentation", with_presentation, "Include relators");
  classify_cmd->add_flag("--express", with_express, "Include generator-expression words");
  classify_cmd->callback([&] {
    run = [&] {
      Outcome o;
      GroupSpec s = spec_flags.resolve();
      o.inputs = {{"spec", to_json(s)}, {"presentation", with_presentation}, {"express", with_express}};
      StructureReport r = classify(s);
      o.result = to_json(r);
      if (with_presentation) o.result["presentation"] = r.presentation ? to_json(*r.presentation) : Json(nullptr);
      if (with_express) {
        Json ex = Json::array();
        try {
          for (const auto& e : express_generators(r.canonical.spec)) ex.push_back(to_json(e));
          o.result["expressions"] = ex;
        } catch (const UnsupportedCase& e) {
          o.result["expressions"] = nullptr;
          o.diagnostics.push_back(e.what());
        }
      }
      return o;
    };
  });

  auto* identity_cmd = app.add_subcommand("is-identity", "Decide whether a word is the identity");
  spec_flags.attach(identity_cmd);
  identity_cmd->add_option("word", word, "Word, e.g. \"A^1 B^-2\"")->required();
  identity_cmd->callback([&] {
    run = [&] {
      Outcome o;
      GroupSpec s = spec_flags.resolve();
      Word w = parse_in(s, word);
      o.inputs = {{"spec", to_json(s)}, {"word", w.str()}};
      IdentityVerdict v = is_identity(s, w);
      o.result = to_json(v);
      o.result["oracle"] = "exact matrix (agrees)";
      return o;
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite a word to its normal form");
  spec_flags.attach(normalize_cmd);
  bool with_trace = false;
  normalize_cmd->add_option("word", word, "Word")->required();
  normalize_cmd->add_flag("--trace", with_trace, "Include the rewrite steps (Ghat only)");
  normalize_cmd->callback([&] {
    run = [&] {
      Outcome o;
      GroupSpec s = spec_flags.resolve();
      Word w = parse_in(s, word);
      o.inputs = {{"spec", to_json(s)}, {"word", w.str()}, {"trace", with_trace}};
      o.result = to_json(normalize(s, w));
      if (with_trace) {
        if (s.family == Family::HatG) {
          RewriteTrace t;
          nf_hatG_m4(w, s.m, &t);
          o.result["trace"] = to_json(t);
        } else {
          o.diagnostics.push_back("--trace is only available for Ghat(m,4)");
        }
      }
      return o;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Check the half-turn, braid and ell relations exactly");
  spec_flags.attach(verify_cmd);
  verify_cmd->callback([&] {
    run = [&] {
      Outcome o;
      GroupSpec s = spec_flags.resolve();
      o.inputs = {{"spec", to_json(s)}};
      RelationReport r = verify_relations(s);
      o.result = to_json(r);
      if (!r.all_pass()) o.code = kInternal;
      return o;
    };
  });

  auto* amalgam_cmd = app.add_subcommand("amalgam", "Amalgamated-product normal form of a word");
  spec_flags.attach(amalgam_cmd);
  amalgam_cmd->add_option("word", word, "Word")->required();
  amalgam_cmd->callback([&] {
    run = [&] {
      Outcome o;
      GroupSpec s = spec_flags.resolve();
      Word w = parse_in(s, word);
      o.inputs = {{"spec", to_json(s)}, {"word", w.str()}};
      AmalgamDecomposition d = amalgam_for(s);
      o.result = to_json(amalgam_nf(w, d));
      o.result["decomposition"] = d.left + " *_" + d.common + " " + d.right;
      o.result["working"] = to_json(d.working);
      return o;
    };
  });

  long long m = 0;
  int max_n = 3, max_exp = 3, max_length = 5;
  auto* foundation_cmd = app.add_subcommand("foundation", "Certify every lemma-form word in a box");
  foundation_cmd->add_option("--m", m, "T = R_x^{2pi/m}")->required();
  foundation_cmd->add_option("--max-n", max_n, "Largest number of S T pairs")->capture_default_str();
  foundation_cmd->add_option("--max-exp", max_exp, "Largest |a_i|")->capture_default_str();
  foundation_cmd->callback([&] {
    run = [&] {
      Outcome o;
      o.inputs = {{"m", m}, {"max_n", max_n}, {"max_exp", max_exp}};
      BatchSummary b = foundation_batch(m, max_n, max_exp, progress);
      o.result = to_json(b);
      if (!b.ok()) o.code = kInternal;
      return o;
    };
  });

  std::string variant = "lemma";
  bool reduce_ext1 = false;
  auto* certify_cmd = app.add_subcommand("certify", "Certify one S,T word as non-identity");
  certify_cmd->add_option("--m", m, "T = R_x^{2pi/m}")->required();
  certify_cmd->add_option("--variant", variant, "lemma, ext1 or ext2")->capture_default_str();
  certify_cmd->add_flag("--reduce", reduce_ext1, "Apply the quarter-turn contractions first");
  certify_cmd->add_option("word", word, "Word over S, T")->required();
  certify_cmd->callback([&] {
    run = [&] {
      Outcome o;
      Word w = Word::parse(word);
      check_alphabet(GroupSpec::hatg(m), w);
      o.inputs = {{"m", m}, {"variant", variant}, {"reduce", reduce_ext1}, {"word", w.str()}};
      FoundationHypotheses h = FoundationHypotheses::from_word(m, w, parse_variant(variant));
      HypothesisCheck c = check_hypotheses(h);
      if (!c.ok) throw HypothesisError(variant + " hypotheses fail for " + w.str() + ": " + c.clause);
      if (reduce_ext1) {
        Word r = ext1_reduce(h);
        o.result = to_json(witness_for(m, r, h.variant));
        o.result["reduced_from"] = w.str();
      } else {
        o.result = to_json(certify_non_identity(h));
      }
      return o;
    };
  });

  long long p = 0, q = 0;
  auto* ext2_cmd = app.add_subcommand("ext2", "Certify an A,C word in G(p,q) under the orthogonal-axes hypotheses");
  ext2_cmd->add_option("--p", p, "A = R_x^{2pi/p}")->required();
  ext2_cmd->add_option("--q", q, "C = R_z^{2pi/q}")->required();
  ext2_cmd->add_option("word", word, "Word over A, C")->required();
  ext2_cmd->callback([&] {
    run = [&] {
      Outcome o;
      Word w = Word::parse(word);
      o.inputs = {{"p", p}, {"q", q}, {"word", w.str()}};
      o.result = to_json(ext2_check(w, p, q));
      return o;
    };
  });

  auto* free_cmd = app.add_subcommand("free-cert", "Certify words in the free pair (STST, ST^2ST^2)");
  free_cmd->add_option("--m", m, "T = R_x^{2pi/m}")->required();
  free_cmd->add_option("--max-length", max_length, "Largest reduced word length")->capture_default_str();
  free_cmd->add_option("--word", word, "Certify one word over A, B instead of the batch");
  free_cmd->callback([&] {
    run = [&] {
      Outcome o;
      if (!word.empty()) {
        Word w = Word::parse(word);
        o.inputs = {{"m", m}, {"word", w.str()}};
        o.result = to_json(certify_free(m, w));
        return o;
      }
      o.inputs = {{"m", m}, {"max_length", max_length}};
      BatchSummary b = free_batch(m, max_length, progress);
      o.result = to_json(b);
      if (!b.ok()) o.code = kInternal;
      return o;
    };
  });

  int radius = 10;
  std::size_t budget = default_budget();
  std::string csv;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Breadth-first Cayley ball over exact matrices");
  spec_flags.attach(enumerate_cmd);
  enumerate_cmd->add_option("--radius", radius, "Largest word length")->capture_default_str();
  enumerate_cmd->add_option("--budget", budget, "Element cap (default from ROTLAB_BUDGET)")->capture_default_str();
  enumerate_cmd->add_option("--csv", csv, "Also write radius,count to this file");
  enumerate_cmd->callback([&] {
    run = [&] {
      Outcome o;
      GroupSpec s = spec_flags.resolve();
      o.inputs = {{"spec", to_json(s)}, {"radius", radius}, {"budget", budget}};
      BallReport b = bfs_ball(s, radius, budget);
      o.result = to_json(b);
      if (b.truncated) o.diagnostics.push_back("element budget reached; counts cover complete radii only");
      if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out) throw UsageError("cannot write " + csv);
        out << ball_csv(b);
      }
      return o;
    };
  });

  int growth_radius = 5;
  auto* growth_cmd = app.add_subcommand("growth", "Compare matrix ball sizes with a combinatorial oracle");
  spec_flags.attach(growth_cmd);
  growth_cmd->add_option("--radius", growth_radius, "Largest word length")->capture_default_str();
  growth_cmd->add_option("--budget", budget, "Element cap (default from ROTLAB_BUDGET)")->capture_default_str();
  growth_cmd->callback([&] {
    run = [&] {
      Outcome o;
      GroupSpec s = spec_flags.resolve();
      o.inputs = {{"spec", to_json(s)}, {"radius", growth_radius}, {"budget", budget}};
      GrowthComparison g = growth_compare(s, growth_radius, budget);
      o.result = to_json(g);
      if (g.ball.truncated) o.diagnostics.push_back("element budget reached; compared complete radii only");
      if (!g.all_match()) o.code = kInternal;
      return o;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    Outcome o = run();
    Json doc = make_document(command, o.inputs, o.result, o.diagnostics);
    std::cout << (format == "text" ? render_text(doc) : doc.dump(2) + "\n");
    return o.code;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis rejected: " << e.what() << "\n";
    return kHypothesis;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedCase& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
