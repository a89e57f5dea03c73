// strata: command-line front end.
//
// Exit status: 0 on success, 1 on domain errors (empty strata, degenerate
// loops, failed verification), 2 on malformed options or input text.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "strata/braid_word.hpp"
#include "strata/classify.hpp"
#include "strata/config_loop.hpp"
#include "strata/garside.hpp"
#include "strata/group_element.hpp"
#include "strata/loop_invariants.hpp"
#include "strata/presentation.hpp"
#include "strata/smith.hpp"
#include "strata/todd_coxeter.hpp"
#include "strata/verification.hpp"

using json = nlohmann::ordered_json;
using namespace strata;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json form_json(const GarsideForm& f) {
  json out;
  out["strands"] = f.strands;
  out["delta_power"] = f.delta_power;
  auto factors = json::array();
  for (const auto& p : f.factors) factors.push_back(p.images());
  out["factors"] = factors;
  out["text"] = f.to_string();
  return out;
}

struct PresentationSource {
  std::string builtin;
  std::string text;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--builtin", builtin, "artin:K, pure-braid:K, pure-braid-mod-d:K, braid-mod-delta2:K, top:M");
    auto* t = cmd->add_option("--presentation", text, "inline presentation 'gens: a, b ; rels: a b A B'");
    auto* f = cmd->add_option("--file", file, "file holding a presentation")->check(CLI::ExistingFile);
    b->excludes(t)->excludes(f);
    t->excludes(f);
  }

  Presentation load() const {
    if (!builtin.empty()) return builtin_presentation(builtin);
    if (!text.empty()) return Presentation::parse(text);
    if (!file.empty()) return Presentation::parse(read_file(file));
    throw UsageError("one of --builtin, --presentation or --file is required");
  }
};

struct NormalizeCmd {
  int k = 0;
  std::string word;
  bool mod_delta2 = false;

  void attach(CLI::App& app, const bool& as_json) {
    auto* cmd = app.add_subcommand("normalize", "Garside normal form of a braid word");
    cmd->add_option("--k", k, "number of strands")->required()->check(CLI::Range(1, 64));
    cmd->add_option("word", word, "braid word, e.g. 's1 s2^-1 delta^2'")->required();
    cmd->add_flag("--mod-delta2", mod_delta2, "reduce the Δ exponent modulo 2");
    cmd->callback([this, &as_json] { run(as_json); });
  }

  void run(bool as_json) const {
    GarsideForm f = garside_normal_form(BraidWord::parse(k, word));
    if (mod_delta2) f = reduce_mod_delta_square(f);
    if (as_json) {
      std::cout << form_json(f).dump() << "\n";
    } else {
      std::cout << f.to_string() << "\n";
    }
  }
};

struct GroupChoice {
  std::string group;
  std::optional<int> k;
  std::optional<int> i;
  std::optional<int> n;
  bool ordered = false;
  bool unordered = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--group", group, "named group instead of a stratum")
        ->check(CLI::IsMember({"braid", "pure-braid", "braid-mod-delta2", "pure-braid-mod-d", "symmetric", "integers",
                               "trivial", "top"}));
    cmd->add_option("--k", k, "number of points")->check(CLI::Range(1, 64));
    cmd->add_option("--i", i, "affine span dimension")->check(CLI::Range(0, 64));
    cmd->add_option("--n", n, "ambient dimension")->check(CLI::Range(1, 64));
    auto* o = cmd->add_flag("--ordered", ordered, "ordered configurations F");
    auto* u = cmd->add_flag("--unordered", unordered, "unordered configurations C");
    o->excludes(u);
  }

  Flavor flavor() const {
    if (!ordered && !unordered) throw UsageError("one of --ordered or --unordered is required");
    return ordered ? Flavor::ordered : Flavor::unordered;
  }

  GroupDescriptor resolve() const {
    if (!group.empty()) {
      if (group == "top" || group == "integers") {
        if (!n) throw UsageError("--group " + group + " takes --n");
        return named_group(group, *n);
      }
      if (!k) throw UsageError("--group " + group + " takes --k");
      return named_group(group, *k);
    }
    if (!k || !i || !n) throw UsageError("give --group, or all of --k, --i and --n");
    return classify(*k, *i, *n, flavor());
  }
};

json descriptor_json(const GroupDescriptor& d) {
  json out;
  out["name"] = d.name();
  out["case"] = to_string(d.tag);
  out["k"] = d.k;
  out["i"] = d.i;
  out["n"] = d.n;
  out["flavor"] = to_string(d.flavor);
  out["statement"] = d.statement();
  return out;
}

struct EqualCmd {
  GroupChoice choice;
  std::string u;
  std::string v;

  void attach(CLI::App& app, const bool& as_json) {
    auto* cmd = app.add_subcommand("equal", "decide u = v in a classified group");
    choice.attach(cmd);
    cmd->add_option("u", u, "first word")->required();
    cmd->add_option("v", v, "second word")->required();
    cmd->callback([this, &as_json] { run(as_json); });
  }

  void run(bool as_json) const {
    const auto d = choice.resolve();
    const bool same = equal_in_group(d, u, v);
    if (as_json) {
      json out;
      out["equal"] = same;
      out["group"] = descriptor_json(d);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << (same ? "true" : "false") << "\n"
                << "group: " << d.name() << " (" << to_string(d.tag) << ")\n";
    }
  }
};

struct ClassifyCmd {
  GroupChoice choice;

  void attach(CLI::App& app, const bool& as_json) {
    auto* cmd = app.add_subcommand("classify", "fundamental group of a stratum");
    choice.attach(cmd);
    cmd->callback([this, &as_json] { run(as_json); });
  }

  void run(bool as_json) const {
    if (!choice.group.empty()) throw UsageError("classify takes --k, --i, --n, not --group");
    const auto d = choice.resolve();
    if (as_json) {
      std::cout << descriptor_json(d).dump() << "\n";
    } else {
      std::cout << d.name() << "\n"
                << "case: " << to_string(d.tag) << "\n"
                << "statement: " << d.statement() << "\n";
    }
  }
};

struct AbelianizeCmd {
  PresentationSource source;

  void attach(CLI::App& app, const bool& as_json) {
    auto* cmd = app.add_subcommand("abelianize", "abelian invariants of a presentation");
    source.attach(cmd);
    cmd->callback([this, &as_json] { run(as_json); });
  }

  void run(bool as_json) const {
    const auto inv = abelianization(source.load());
    if (as_json) {
      json out;
      out["rank"] = inv.rank;
      auto torsion = json::array();
      for (const auto& t : inv.torsion) torsion.push_back(t.str());
      out["torsion"] = torsion;
      out["text"] = inv.to_string();
      std::cout << out.dump() << "\n";
    } else {
      std::cout << inv.to_string() << "\n";
    }
  }
};

struct EnumerateCmd {
  PresentationSource source;
  std::vector<std::string> subgroup;
  std::size_t max_cosets = kDefaultMaxCosets;

  void attach(CLI::App& app, const bool& as_json) {
    auto* cmd = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
    source.attach(cmd);
    cmd->add_option("--subgroup", subgroup, "subgroup generator word (repeatable)");
    cmd->add_option("--max-cosets", max_cosets, "live coset cap")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->callback([this, &as_json] { run(as_json); });
  }

  void run(bool as_json) const {
    const auto p = source.load();
    std::vector<Word> h;
    for (const auto& w : subgroup) h.push_back(p.parse_word(w));
    const auto table = todd_coxeter(p, h, max_cosets);
    if (as_json) {
      json out;
      out["status"] = table.complete() ? "complete" : "capped";
      out["cosets"] = table.coset_count();
      std::cout << out.dump() << "\n";
    } else if (table.complete()) {
      std::cout << table.coset_count() << "\n";
    } else {
      std::cout << "capped (" << table.coset_count() << " cosets)\n";
    }
  }
};

struct AnalyzeLoopCmd {
  std::string input;
  std::string generate;
  bool extract = false;
  bool winding = false;
  bool span = false;
  std::string compare;
  double tol = kDefaultSpanTolerance;
  ExtractOptions extract_options;
  WindingOptions winding_options;
  bool write_json_loop = false;

  void attach(CLI::App& app, const bool& as_json) {
    auto* cmd = app.add_subcommand("analyze-loop", "braid and winding invariants of a sampled loop");
    auto* in = cmd->add_option("--input", input, "loop JSON file")->check(CLI::ExistingFile);
    auto* gen = cmd->add_option("--generate", generate, "named loop: gamma:k=K[,frames=T] or h:n=N[,frames=T]");
    in->excludes(gen);
    cmd->add_flag("--extract-braid", extract, "read the braid off a planar or collinear loop");
    cmd->add_flag("--winding", winding, "determinant winding number (k = n + 1)");
    cmd->add_flag("--span", span, "affine span dimension range over the frames");
    cmd->add_option("--compare", compare, "braid word to compare the extracted braid with");
    cmd->add_option("--tol", tol, "relative singular value tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--tie-tolerance", extract_options.tie_tolerance, "relative real-part tie margin")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tie-attempts", extract_options.tie_attempts, "half-frame shifts tried on a tie")
        ->capture_default_str()
        ->check(CLI::Range(0, 64));
    cmd->add_option("--perturbation", extract_options.perturbation, "generic offset size relative to separation")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 0.25));
    cmd->add_option("--refinement-budget", winding_options.refinement_budget, "extra frames allowed for winding")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--dump", write_json_loop, "print the loop itself as JSON and stop");
    cmd->callback([this, &as_json] { run(as_json); });
  }

  void run(bool as_json) const {
    if (input.empty() && generate.empty()) throw UsageError("one of --input or --generate is required");
    const ConfigLoop loop = input.empty() ? generate_named_loop(generate) : loop_from_json(read_file(input));
    if (write_json_loop) {
      std::cout << to_json(loop) << "\n";
      return;
    }
    const bool do_extract = extract || !compare.empty();
    const bool any = do_extract || winding || span;
    json out;
    out["k"] = loop.k();
    out["n"] = loop.n();
    out["frames"] = loop.frame_count();
    std::ostringstream text;

    if (span || !any) {
      const auto reports = span_reports(loop, tol);
      int lo = reports.front().dimension;
      int hi = lo;
      for (const auto& r : reports) {
        lo = std::min(lo, r.dimension);
        hi = std::max(hi, r.dimension);
      }
      out["span"] = {{"min", lo}, {"max", hi}};
      text << "span: min " << lo << ", max " << hi << "\n";
    }
    if (do_extract || (!any && loop.k() != loop.n() + 1)) {
      const BraidWord b = extract_braid(loop, extract_options);
      const GarsideForm f = garside_normal_form(b);
      out["braid"] = b.to_string();
      out["normal_form"] = f.to_string();
      text << "braid: " << b.to_string() << "\n"
           << "normal form: " << f.to_string() << "\n";
      if (!compare.empty()) {
        const bool same = equal_in_braid(b, BraidWord::parse(loop.k(), compare));
        out["compare"] = same ? "equal" : "different";
        text << (same ? "equal" : "different") << "\n";
      }
    }
    if (winding || (!any && loop.k() == loop.n() + 1)) {
      const long w = det_winding(loop, winding_options);
      out["winding"] = w;
      text << "winding: " << w << "\n";
    }
    std::cout << (as_json ? out.dump() + "\n" : text.str());
  }
};

struct VerifyCmd {
  int max_k = 5;
  int* exit_status = nullptr;

  void attach(CLI::App& app, const bool& as_json, int& status) {
    exit_status = &status;
    auto* cmd = app.add_subcommand("verify-paper", "run every group-level claim and report");
    cmd->add_option("--max-k", max_k, "largest strand count")->capture_default_str()->check(CLI::Range(3, 7));
    cmd->callback([this, &as_json] { run(as_json); });
  }

  void run(bool as_json) const {
    const auto report = paper_verification_suite(max_k);
    std::cout << (as_json ? report.to_json() + "\n" : report.to_text());
    *exit_status = report.all_passed() ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of point configurations: braids, presentations, loops"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  int status = 0;

  NormalizeCmd normalize;
  EqualCmd equal;
  ClassifyCmd classify_cmd;
  AbelianizeCmd abelianize;
  EnumerateCmd enumerate;
  AnalyzeLoopCmd analyze;
  VerifyCmd verify;
  normalize.attach(app, as_json);
  equal.attach(app, as_json);
  classify_cmd.attach(app, as_json);
  abelianize.attach(app, as_json);
  enumerate.attach(app, as_json);
  analyze.attach(app, as_json);
  verify.attach(app, as_json, status);
  // --json is accepted after the subcommand as well.
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
