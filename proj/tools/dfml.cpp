// dfml — two-sorted relational semantics toolbox.
//
// Exit codes: 0 = property holds / success, 1 = property fails (witness or
// countermodel printed), 2 = input or usage error.
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dfml/axioms.hpp"
#include "dfml/canonical.hpp"
#include "dfml/formats.hpp"
#include "dfml/proofs.hpp"
#include "dfml/search.hpp"
#include "dfml/semantics.hpp"
#include "json.hpp"

using namespace dfml;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& text, char extra = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == extra || c == '+') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// Frame-class spec: named classes (min, K, D, T, S4, B, S5, refined,
/// separated) and axiom ids, combined with ',' or '+'.
std::vector<std::string> parse_class(const std::string& spec) {
  std::vector<std::string> ids;
  auto add = [&](const std::string& id) {
    for (const std::string& have : ids)
      if (have == id) return;
    ids.push_back(id);
  };
  for (const std::string& tok : split_list(spec)) {
    if (tok == "refined") {
      for (const char* id : {"F1", "F2", "F3", "F4", "F5", "F6"}) add(id);
    } else if (tok == "separated") {
      add("F1");
    } else {
      bool logic = false;
      for (const std::string& name : logic_names())
        if (tok == name) logic = true;
      if (logic) {
        for (const std::string& id : frame_class_for_logic(tok)) add(id);
      } else {
        add(tok);  // bare axiom id; validated by the search/axioms layer
      }
    }
  }
  return ids;
}

std::string verdict_name(Verdict v) {
  return v == Verdict::Pass ? "pass" : v == Verdict::Fail ? "fail" : "n/a";
}

json valuation_json(const std::map<int, Mask>& val,
                    const std::vector<std::string>& names) {
  json j = json::object();
  for (const auto& [var, mask] : val) {
    json pts = json::array();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (bit(mask, static_cast<int>(i))) pts.push_back(names[i]);
    j["p" + std::to_string(var)] = pts;
  }
  return j;
}

std::string valuation_text(const std::map<int, Mask>& val,
                           const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [var, mask] : val) {
    if (!out.empty()) out += "; ";
    out += "p" + std::to_string(var) + ":";
    bool any = false;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (bit(mask, static_cast<int>(i))) {
        out += " " + names[i];
        any = true;
      }
    if (!any) out += " {}";
  }
  return out;
}

int cmd_classify(const std::string& frm_path, const std::string& axioms_csv,
                 bool as_json) {
  SortedFrame f = parse_frm(slurp(frm_path));
  FrameClassReport rep = classify_frame(f);
  std::vector<std::string> wanted =
      axioms_csv.empty() ? axiom_ids() : split_list(axioms_csv);
  bool all_pass = true;
  json jax = json::array();
  for (const std::string& id : wanted) {
    const AxiomResult& r = rep.result(id);  // throws FrameError on bad id
    if (!r.passed()) all_pass = false;
    if (as_json) {
      jax.push_back({{"id", id},
                     {"verdict", verdict_name(r.verdict)},
                     {"witness", r.witness}});
    } else {
      std::cout << id << ": " << verdict_name(r.verdict);
      if (!r.witness.empty()) std::cout << " (" << r.witness << ")";
      std::cout << "\n";
    }
  }
  if (as_json) {
    std::cout << json{{"axioms", jax}, {"refined", rep.refined}}.dump(2)
              << "\n";
  } else {
    std::cout << "refined: " << (rep.refined ? "yes" : "no") << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_check(const std::string& frm_path, const std::string& sequent_text,
              const std::string& val_path, bool as_json) {
  SortedFrame f = parse_frm(slurp(frm_path));
  Sequent s = parse_sequent(sequent_text);
  std::vector<std::string> names = point_names(f, Sort::One);
  if (!val_path.empty()) {
    std::map<int, Mask> val = parse_val(slurp(val_path), names);
    Model m = build_model(f, val);
    SequentCheck sc = check_sequent_model(m, s);
    if (as_json)
      std::cout << json{{"holds", sc.holds}, {"witness", sc.witness}}.dump(2)
                << "\n";
    else if (sc.holds)
      std::cout << "holds\n";
    else
      std::cout << "fails: witness " << sc.witness << "\n";
    return sc.holds ? 0 : 1;
  }
  FrameCheck fc = check_sequent_frame(f, s);
  if (as_json) {
    std::cout << json{{"holds", fc.holds},
                      {"valuation", valuation_json(fc.valuation, names)},
                      {"witness", fc.witness}}
                     .dump(2)
              << "\n";
  } else if (fc.holds) {
    std::cout << "holds\n";
  } else {
    std::cout << "fails: valuation " << valuation_text(fc.valuation, names)
              << "; witness " << fc.witness << "\n";
  }
  return fc.holds ? 0 : 1;
}

int cmd_canonical(const std::string& lat_path, const std::string& out_path,
                  bool verify_iso, bool do_classify,
                  const std::string& canonicity_csv, bool as_json) {
  FiniteNLE nle = parse_lat(slurp(lat_path));
  CanonicalFrame cf = canonical_frame(nle);
  std::string frm = emit_frm(cf.frame);
  if (!out_path.empty())
    spit(out_path, frm);
  else if (!as_json)
    std::cout << frm;

  bool ok = true;
  json j;
  if (as_json) j["frame"] = frm;
  if (verify_iso) {
    RepresentationReport rep = verify_representation(nle);
    ok = ok && rep.ok;
    if (as_json)
      j["representation"] = {{"ok", rep.ok},
                             {"witness", rep.witness},
                             {"lattice_size", rep.lattice_size},
                             {"stable_size", rep.stable_size}};
    else
      std::cout << "representation: "
                << (rep.ok ? "ok (|L| = " + std::to_string(rep.lattice_size) +
                                 ")"
                           : "fail (" + rep.witness + ")")
                << "\n";
  }
  if (do_classify) {
    FrameClassReport rep = classify_frame(cf.frame);
    ok = ok && rep.refined;
    if (as_json) {
      json jax = json::array();
      for (const auto& [id, r] : rep.axioms)
        jax.push_back({{"id", id},
                       {"verdict", verdict_name(r.verdict)},
                       {"witness", r.witness}});
      j["classify"] = {{"axioms", jax}, {"refined", rep.refined}};
    } else {
      std::cout << rep.to_string();
    }
  }
  if (!canonicity_csv.empty()) {
    json jcan = json::array();
    for (const CanonicityEntry& e :
         canonicity_report(nle, split_list(canonicity_csv))) {
      bool entry_ok = !e.algebra.ok || e.frame.passed();
      ok = ok && entry_ok;
      if (as_json) {
        jcan.push_back({{"equation", e.equation_id},
                        {"frame_axiom", e.frame_axiom},
                        {"algebra_ok", e.algebra.ok},
                        {"frame_verdict", verdict_name(e.frame.verdict)},
                        {"witness", e.frame.witness}});
      } else {
        std::cout << e.equation_id << ": algebra "
                  << (e.algebra.ok ? "pass" : "fail") << ", " << e.frame_axiom
                  << " " << verdict_name(e.frame.verdict);
        if (!e.frame.witness.empty())
          std::cout << " (" << e.frame.witness << ")";
        std::cout << "\n";
      }
    }
    if (as_json) j["canonicity"] = jcan;
  }
  if (as_json) std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_prove(const std::string& sequent_text, const std::string& logic,
              int depth, const std::string& out_path, bool as_json) {
  Sequent s = parse_sequent(sequent_text);
  std::set<std::string> axioms = axioms_for_logic(logic);
  std::optional<Derivation> d = search_proof(s, axioms, depth);
  if (!d) {
    if (as_json)
      std::cout << json{{"found", false}, {"depth", depth}}.dump(2) << "\n";
    else
      std::cerr << "not found at depth " << depth << " (inconclusive)\n";
    return 1;
  }
  std::string cert = emit_prf(*d);
  if (as_json)
    std::cout << json{{"found", true},
                      {"height", derivation_height(*d)},
                      {"certificate", cert}}
                     .dump(2)
              << "\n";
  else if (out_path.empty())
    std::cout << cert;
  if (!out_path.empty()) spit(out_path, cert);
  return 0;
}

int cmd_checkproof(const std::string& prf_path, const std::string& logic,
                   bool as_json) {
  Derivation d = parse_prf(slurp(prf_path));
  ProofCheck pc = check_derivation(d, axioms_for_logic(logic));
  if (as_json)
    std::cout << json{{"ok", pc.ok}, {"witness", pc.witness}}.dump(2) << "\n";
  else if (pc.ok)
    std::cout << "pass: " << to_string(d.sequent) << "\n";
  else
    std::cout << "fail: " << pc.witness << "\n";
  return pc.ok ? 0 : 1;
}

int cmd_countermodel(const std::string& sequent_text,
                     const std::string& class_spec, int max_size,
                     long long budget, const std::string& out_prefix,
                     bool as_json) {
  Sequent s = parse_sequent(sequent_text);
  SearchBounds b;
  b.max_z1 = b.max_zd = max_size;
  b.frame_class = parse_class(class_spec);
  b.budget = budget;
  CountermodelResult r = find_countermodel(s, b);
  if (!r.found) {
    std::string why = r.outcome == EnumOutcome::Exhausted
                          ? "exhausted"
                          : "budget exhausted";
    if (as_json)
      std::cout << json{{"found", false},
                        {"outcome", why},
                        {"examined", r.stats.examined}}
                       .dump(2)
                << "\n";
    else
      std::cout << "none found (" << why << ")\n";
    return 1;
  }
  std::vector<std::string> names = point_names(r.found->frame, Sort::One);
  std::string frm = emit_frm(r.found->frame);
  std::string val = emit_val(r.found->valuation, names);
  if (as_json) {
    std::cout << json{{"found", true},
                      {"frame", frm},
                      {"valuation", val},
                      {"witness", r.found->witness}}
                     .dump(2)
              << "\n";
  } else if (!out_prefix.empty()) {
    spit(out_prefix + ".frm", frm);
    spit(out_prefix + ".val", val);
    std::cout << "countermodel written to " << out_prefix << ".frm and "
              << out_prefix << ".val; witness " << r.found->witness << "\n";
  } else {
    std::cout << frm << "# valuation\n" << val << "# witness "
              << r.found->witness << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dfml: two-sorted relational semantics for distribution-free "
               "modal logic"};
  app.require_subcommand(1);
  bool as_json = false;
  int jobs = 1;
  app.add_flag("--json", as_json, "emit machine-readable reports");
  app.add_option("--jobs", jobs,
                 "worker count for long enumerations (results are merged "
                 "deterministically; currently single-process)");

  std::string frm_path, sequent_text, val_path, axioms_csv;
  auto* classify = app.add_subcommand("classify", "classify a .frm frame");
  classify->add_option("frame", frm_path, "path to .frm file")->required();
  classify->add_option("--axioms", axioms_csv,
                       "comma-separated axiom ids (default: all)");

  auto* check = app.add_subcommand("check", "check a sequent on a frame");
  check->add_option("frame", frm_path, "path to .frm file")->required();
  check->add_option("sequent", sequent_text, "sequent text")->required();
  check->add_option("--val", val_path, "path to .val file (model check)");

  std::string lat_path, out_path, canonicity_csv;
  bool verify_iso = false, do_classify = false;
  auto* canonical =
      app.add_subcommand("canonical", "canonical frame of a .lat lattice");
  canonical->add_option("lattice", lat_path, "path to .lat file")->required();
  canonical->add_option("--out", out_path, "write the .frm here");
  canonical->add_flag("--verify-iso", verify_iso,
                      "verify the representation isomorphism");
  canonical->add_flag("--classify", do_classify, "classify the frame");
  canonical->add_option("--canonicity", canonicity_csv,
                        "comma-separated equational axiom ids");

  std::string logic = "min";
  int depth = 6;
  auto* prove = app.add_subcommand("prove", "bounded backward proof search");
  prove->add_option("sequent", sequent_text, "sequent text")->required();
  prove->add_option("--logic", logic, "min, K, D, T, S4, B or S5");
  prove->add_option("--depth", depth, "proof height bound");
  prove->add_option("--out", out_path, "write the .prf here");

  std::string prf_path;
  auto* checkproof =
      app.add_subcommand("checkproof", "check a .prf derivation");
  checkproof->add_option("proof", prf_path, "path to .prf file")->required();
  checkproof->add_option("--logic", logic, "min, K, D, T, S4, B or S5");

  std::string class_spec = "separated";
  int max_size = 3;
  long long budget = -1;
  auto* countermodel =
      app.add_subcommand("countermodel", "search small frames for a falsifier");
  countermodel->add_option("sequent", sequent_text, "sequent text")->required();
  countermodel->add_option("--class", class_spec,
                           "frame class: named (min, K, …, refined, "
                           "separated) and/or axiom ids joined by , or +");
  countermodel->add_option("--max-size", max_size, "max points per sort");
  countermodel->add_option("--budget", budget,
                           "max candidates examined (-1 = unlimited)");
  countermodel->add_option("--out", out_path, "write <out>.frm and <out>.val");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*classify) return cmd_classify(frm_path, axioms_csv, as_json);
    if (*check) return cmd_check(frm_path, sequent_text, val_path, as_json);
    if (*canonical)
      return cmd_canonical(lat_path, out_path, verify_iso, do_classify,
                           canonicity_csv, as_json);
    if (*prove)
      return cmd_prove(sequent_text, logic, depth, out_path, as_json);
    if (*checkproof) return cmd_checkproof(prf_path, logic, as_json);
    if (*countermodel)
      return cmd_countermodel(sequent_text, class_spec, max_size, budget,
                              out_path, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
