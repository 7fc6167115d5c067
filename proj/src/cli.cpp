#include "gospace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace gospace {

GoMode go_mode_from_string(const std::string &s) {
  if (s == "auto") return GoMode::auto_mode;
  if (s == "refute") return GoMode::refute;
  if (s == "sample") return GoMode::sample;
  if (s == "certify") return GoMode::certify;
  throw InputError("unknown mode '" + s + "'");
}

Json to_json(const GoVerdict &v) {
  Json j;
  j["space"] = v.space;
  j["mode"] = to_string(v.mode);
  if (v.witness) j["witness"] = to_json(v.witness->coords);
  if (v.ranks) j["ranks"] = Json{{"coefficient", v.ranks->coefficient}, {"augmented", v.ranks->augmented}};
  j["samples"] = Json{{"tested", v.samples.tested},
                      {"failed", v.samples.failed},
                      {"seed", v.samples.seed},
                      {"enumerated", v.samples.enumerated},
                      {"null_samples", v.samples.null_samples},
                      {"null_skipped", v.samples.null_skipped}};
  if (v.graph_map) j["graph_map"] = to_json(*v.graph_map);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

namespace {

Json side_json(const GoSideStatus &s) {
  return Json{{"certified", s.certified}, {"refuted", s.refuted}, {"verdict", to_json(s.verdict)}};
}

Json witness_json(const NatredResult &r) {
  if (!r.witness) return nullptr;
  return Json::array({(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
}

std::string go_status(const GoSideStatus &s) {
  if (s.certified) return "certified_linear";
  if (s.refuted) return "refuted";
  return "sampled_consistent";
}

}  // namespace

Json to_json(const CrownGoReport &r) {
  return Json{{"space", r.space},
              {"real", side_json(r.real)},
              {"crown", side_json(r.crown)},
              {"violation", r.violation},
              {"sampling_escape", r.sampling_escape}};
}

Json to_json(const OmegaRealformReport &r) {
  return Json{{"space", r.space},
              {"samples", r.samples},
              {"seed", r.seed},
              {"members", r.members},
              {"discrepancies", r.discrepancies}};
}

Json to_json(const CrownNatredReport &r) {
  Json j;
  j["space"] = r.space;
  j["natred"] = r.real.natred;
  if (r.real.witness) {
    j["witness"] = witness_json(r.real);
    j["value"] = r.real.value.to_string();
  }
  j["crown_natred"] = r.crown.natred;
  j["consistent"] = r.consistent;
  j["note"] = "exact decision over all complement basis triples";
  return j;
}

Json to_json(const CommutatorReport &r, const ReductiveSpace &space) {
  std::vector<std::string> m_labels;
  for (auto i : space.complement()) m_labels.push_back(space.labels()[i]);
  Json refutations = Json::array();
  for (const auto &ref : r.refutations)
    refutations.push_back(Json{{"p", to_string(r.invariants[ref.p].poly, m_labels)},
                               {"q", to_string(r.invariants[ref.q].poly, m_labels)},
                               {"nonzero_term", ref.nonzero_term}});
  Json j;
  j["space"] = r.space;
  j["degree_cap"] = r.degree_cap;
  j["dims"] = r.dims;
  j["pairs_tested"] = r.pairs_tested;
  j["refutations"] = refutations;
  j["crown_consistent"] = r.crown_consistent;
  j["crown_checked"] = r.crown_checked;
  j["note"] = r.refutations.empty()
                  ? "commutative up to degree " + std::to_string(r.degree_cap) + " (evidence, not a proof)"
                  : "D(G,H) is not commutative: a commutator of invariants is nonzero modulo U(g)h";
  j["caveat"] = "computed for the presented G; equals the algebra of invariant operators of the manifold only when G is its full connected isometry group";
  return j;
}

Json to_json(const FamilyReport &r) {
  Json entries = Json::array();
  for (const auto &e : r.entries) {
    Json j;
    j["name"] = e.name;
    j["role"] = e.is_crown ? "crown" : "member";
    j["ok"] = e.ok;
    if (!e.ok) {
      j["error"] = e.error;
      entries.push_back(std::move(j));
      continue;
    }
    j["signature"] = Json::array({e.signature.positive, e.signature.negative});
    j["go"] = Json{{"status", go_status(e.go)}, {"certified", e.go.certified}, {"refuted", e.go.refuted}};
    j["natred"] = Json{{"natred", e.natred.natred}, {"witness", witness_json(e.natred)}};
    j["dims"] = e.dims;
    j["commutator_refutations"] = e.commutator_refutations;
    j["space"] = to_json(*e.space);
    entries.push_back(std::move(j));
  }
  return Json{{"family", r.family}, {"entries", entries}, {"violations", r.violations}};
}

Json to_json(const AuditReport &r) {
  return Json{{"space", r.space},
              {"go_status", r.go_status},
              {"natred", r.natred},
              {"symmetric_pair", r.symmetric_pair},
              {"catalog_errors", r.catalog_errors}};
}

CommandResult cmd_validate(const ReductiveSpace &space) {
  const ValidationReport v = validate(space);
  Json j{{"space", space.name()}};
  j.update(to_json(v));
  return {j, v.ok() ? exit_ok : exit_input_error};
}

CommandResult cmd_check_go(const ReductiveSpace &space, GoMode mode, const GoOptions &options) {
  GoVerdict v;
  switch (mode) {
    case GoMode::auto_mode:
      v = go_auto(space, options);
      break;
    case GoMode::certify:
      if (auto c = certify_go_linear(space)) {
        v = *c;
      } else {
        v.space = space.name();
        v.mode = GoVerdict::Mode::inconclusive;
        v.notes.push_back("no linear graph map with c = 0 exists; this does not refute GO");
      }
      break;
    case GoMode::refute:
      if (auto r = refute_go(space, options)) {
        v = *r;
      } else {
        v.space = space.name();
        v.mode = GoVerdict::Mode::sampled_consistent;
        v.samples.enumerated = enumeration_prefix(space.dim_m()).size();
        v.samples.tested = space.dim_m() == 0 ? 0 : options.samples;
        v.samples.seed = options.seed;
      }
      break;
    case GoMode::sample:
      v = sample_go(space, options);
      break;
  }
  return {to_json(v), v.mode == GoVerdict::Mode::refuted ? exit_refuted : exit_ok};
}

CommandResult cmd_check_natred(const ReductiveSpace &space) {
  if (space.field() == Field::rational) {
    const CrownNatredReport r = check_crown_natred(space);
    return {to_json(r), r.real.natred && r.consistent ? exit_ok : exit_refuted};
  }
  // A gaussian space is its own crown.
  CrownNatredReport r;
  r.space = space.name();
  r.real = r.crown = is_naturally_reductive(space);
  return {to_json(r), r.real.natred ? exit_ok : exit_refuted};
}

CommandResult cmd_invariants(const ReductiveSpace &space, unsigned max_degree) {
  std::vector<std::string> m_labels;
  for (auto i : space.complement()) m_labels.push_back(space.labels()[i]);
  Json bases = Json::array();
  std::vector<std::size_t> dims;
  for (unsigned d = 0; d <= max_degree; ++d) {
    Json basis = Json::array();
    for (const auto &p : invariant_basis(space, d)) basis.push_back(to_string(p, m_labels));
    dims.push_back(basis.size());
    bases.push_back(std::move(basis));
  }
  Json j;
  j["space"] = space.name();
  j["max_degree"] = max_degree;
  j["dims"] = dims;
  bool consistent = true;
  if (space.field() == Field::rational) {
    const InvariantDims r = check_invariants_realform(space, max_degree);
    j["crown_dims"] = r.crown_dims;
    consistent = r.consistent && r.real_dims == dims;
  }
  j["consistent"] = consistent;
  j["bases"] = bases;
  return {j, consistent ? exit_ok : exit_refuted};
}

CommandResult cmd_commutators(const ReductiveSpace &space, unsigned max_degree) {
  if (max_degree < 1) throw InputError("--max-degree must be at least 1");
  const CommutatorReport r = commutator_report(space, max_degree);
  return {to_json(r, space), r.refutations.empty() && r.crown_consistent ? exit_ok : exit_refuted};
}

CommandResult cmd_complexify(const ReductiveSpace &space) {
  if (space.field() != Field::rational) throw InputError("complexify: space is already gaussian");
  const ReductiveSpace crown = complexify(space);
  Json j = to_json(crown);
  return {j, exit_ok};
}

CommandResult cmd_sample_omega(const ReductiveSpace &space, const GoOptions &options) {
  if (space.field() != Field::rational) throw InputError("sample-omega: rational space required");
  const OmegaRealformReport r = check_omega_realform(space, options);
  return {to_json(r), r.discrepancies == 0 ? exit_ok : exit_refuted};
}

CommandResult cmd_family_verify(const Family &family, const FamilyOptions &options) {
  const FamilyReport r = family_verify(family, options);
  return {to_json(r), r.ok() ? exit_ok : exit_refuted};
}

CommandResult cmd_analyze(const ReductiveSpace &space, const FamilyOptions &options) {
  Json j;
  j["space"] = space.name();
  j["validation"] = cmd_validate(space).report;

  const Signature sig = signature(space);
  j["signature"] = Json::array({sig.positive, sig.negative});

  const SymmetricPairResult sym = is_symmetric_pair(space);
  Json sym_json{{"symmetric", sym.symmetric}};
  if (sym.witness) sym_json["witness"] = Json::array({sym.witness->first, sym.witness->second});
  j["symmetric_pair"] = sym_json;

  bool violated = false;
  j["go"] = cmd_check_go(space, GoMode::auto_mode, options.go).report;
  if (space.field() == Field::rational) {
    const CrownGoReport crown = check_crown_go_consistency(space, options.go);
    violated |= crown.violation;
    j["crown_go"] = to_json(crown);
  }

  const CommandResult natred = cmd_check_natred(space);
  violated |= !natred.report["consistent"].get<bool>();
  j["natred"] = natred.report;
  const NatredGoAudit audit = natred_implies_go_audit(space);
  violated |= !audit.passed;
  j["natred_go_audit"] = Json{{"natred", audit.natred},
                              {"certificate_found", audit.certificate_found},
                              {"graph_map_zero", audit.graph_map_zero},
                              {"passed", audit.passed}};

  const CommandResult inv = cmd_invariants(space, options.degree_cap);
  violated |= inv.exit_code != exit_ok;
  j["invariants"] = inv.report;

  if (options.degree_cap >= 1) {
    const CommutatorReport comm = commutator_report(space, options.degree_cap);
    violated |= !comm.crown_consistent;
    j["commutators"] = to_json(comm, space);
  }

  const AuditReport inc = inclusion_audit(space, options);
  violated |= !inc.ok();
  j["inclusion_audit"] = to_json(inc);
  return {j, violated ? exit_refuted : exit_ok};
}

namespace {

ReductiveSpace load_valid_space(const std::string &path) {
  ReductiveSpace space = load_space(path);
  const ValidationReport v = validate(space);
  if (!v.ok()) {
    const auto &f = v.failures.front();
    std::string witness;
    for (auto i : f.witness) witness += (witness.empty() ? "" : ",") + std::to_string(i);
    throw InputError(space.name() + " fails validation: " + f.check + " at (" + witness + ")");
  }
  return space;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact analysis of homogeneous pseudo-riemannian spaces at the Lie-algebra level", "gospace"};
  app.require_subcommand(1);

  std::string file;
  std::string mode = "auto";
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  long bound = 10;
  unsigned degree = 4;

  auto add_file = [&](CLI::App *sub, const char *what) { sub->add_option("file", file, what)->required(); };
  auto add_sampling = [&](CLI::App *sub) {
    sub->add_option("--samples", samples, "number of seeded samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "random seed");
  };

  auto *validate_cmd = app.add_subcommand("validate", "check structure constants, reductivity and metric");
  add_file(validate_cmd, "space file");
  auto *analyze_cmd = app.add_subcommand("analyze", "full report for one space");
  add_file(analyze_cmd, "space file");
  add_sampling(analyze_cmd);
  analyze_cmd->add_option("--bound", bound)->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--max-degree", degree);
  auto *go_cmd = app.add_subcommand("check-go", "geodesic orbit verdict");
  add_file(go_cmd, "space file");
  go_cmd->add_option("--mode", mode)->check(CLI::IsMember({"auto", "refute", "sample", "certify"}));
  add_sampling(go_cmd);
  go_cmd->add_option("--bound", bound, "coordinate bound for random samples")->check(CLI::PositiveNumber);
  auto *natred_cmd = app.add_subcommand("check-natred", "exact natural reductivity decision");
  add_file(natred_cmd, "space file");
  auto *inv_cmd = app.add_subcommand("invariants", "isotropy invariants of S(m) per degree");
  add_file(inv_cmd, "space file");
  inv_cmd->add_option("--max-degree", degree);
  auto *comm_cmd = app.add_subcommand("commutators", "commutators of symmetrized invariants modulo U(g)h");
  add_file(comm_cmd, "space file");
  comm_cmd->add_option("--max-degree", degree);
  auto *cx_cmd = app.add_subcommand("complexify", "print the crown as a space file");
  add_file(cx_cmd, "space file");
  auto *fam_cmd = app.add_subcommand("family-verify", "verify a real form family against its crown");
  add_file(fam_cmd, "family file");
  add_sampling(fam_cmd);
  fam_cmd->add_option("--max-degree", degree);
  auto *omega_cmd = app.add_subcommand("sample-omega", "compare Omega membership over Q and over the crown");
  add_file(omega_cmd, "space file");
  add_sampling(omega_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return exit_input_error;
  }

  const GoOptions go{samples, seed, bound};
  const FamilyOptions fam_opts{go, degree};
  std::string command;
  CommandResult result;
  try {
    if (*validate_cmd) {
      command = "validate";
      result = cmd_validate(load_space(file));
    } else if (*analyze_cmd) {
      command = "analyze";
      result = cmd_analyze(load_valid_space(file), fam_opts);
    } else if (*go_cmd) {
      command = "check-go";
      result = cmd_check_go(load_valid_space(file), go_mode_from_string(mode), go);
    } else if (*natred_cmd) {
      command = "check-natred";
      result = cmd_check_natred(load_valid_space(file));
    } else if (*inv_cmd) {
      command = "invariants";
      result = cmd_invariants(load_valid_space(file), degree);
    } else if (*comm_cmd) {
      command = "commutators";
      result = cmd_commutators(load_valid_space(file), degree);
    } else if (*cx_cmd) {
      command = "complexify";
      result = cmd_complexify(load_valid_space(file));
    } else if (*fam_cmd) {
      command = "family-verify";
      result = cmd_family_verify(load_family(file), fam_opts);
    } else if (*omega_cmd) {
      command = "sample-omega";
      result = cmd_sample_omega(load_valid_space(file), go);
    }
  } catch (const InputError &e) {
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::invalid_argument &e) {
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::domain_error &e) {
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  }

  out << result.report.dump(2) << "\n";
  err << command << " " << file << ": "
      << (result.exit_code == exit_ok ? "ok" : result.exit_code == exit_refuted ? "property refuted or violated" : "invalid input")
      << "\n";
  return result.exit_code;
}

}  // namespace gospace
