#include "runner.hpp"

#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>

#include "groupzero/cayley.hpp"
#include "groupzero/electoral.hpp"
#include "groupzero/ends.hpp"
#include "groupzero/group.hpp"
#include "groupzero/stability.hpp"
#include "groupzero/subset.hpp"
#include "groupzero/topology.hpp"

namespace gz0 {

namespace {

constexpr const char* kArtifactName = "groupzero";
constexpr const char* kArtifactVersion = "0.1.0";

json config_json(const RunConfig& c) {
  json j;
  j["group"] = c.group;
  j["rmax"] = c.rmax;
  j["window"] = c.window;
  j["r"] = c.r;
  j["m"] = c.m;
  j["R"] = c.big_r;
  if (c.depth >= 0) j["depth"] = c.depth;
  if (!c.subset_a.empty()) j["A"] = c.subset_a;
  if (!c.subset_b.empty()) j["B"] = c.subset_b;
  if (!c.topology.empty()) j["topology"] = c.topology;
  if (!c.x_expr.empty()) j["x"] = c.x_expr;
  if (!c.z_expr.empty()) j["z"] = c.z_expr;
  j["side"] = c.side;
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["kind"] = c.kind;
  j["element_cap"] = c.element_cap;
  return j;
}

gz::GroupPtr oracle_for(const RunConfig& cfg) {
  gz::GroupOptions opts;
  if (cfg.depth >= 0) opts.chain_depth = cfg.depth;
  return gz::make_group(cfg.group, opts);
}

json verdict_json(const gz::TopoVerdict& v) {
  json j;
  j["status"] = gz::to_string(v.status);
  j["scale"] = v.scale;
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
  j["evidence"] = v.evidence;
  return j;
}

json profile_json(const gz::StabilityProfile& p) {
  json j;
  j["scale"] = gz::to_string(p.scale);
  json counts = json::array();
  for (auto& [r, c] : p.by_radius) counts.push_back({{"r", r}, {"count", c}});
  j["by_radius"] = counts;
  if (p.bounded) {
    j["verdict"] = "BoundedAtScale";
    j["bound"] = p.bound;
  } else {
    j["verdict"] = "GrowingAtScale";
    j["slope"] = p.slope;
  }
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

json certificate_json(const gz::GroupOracle& oracle,
                      const gz::WitnessCertificate& cert) {
  json j;
  j["side"] = gz::to_string(cert.side);
  j["x"] = oracle.format(cert.x);
  j["size"] = cert.I.size();
  json sample = json::array();
  for (std::size_t i = 0; i < cert.I.size() && i < 20; ++i)
    sample.push_back(oracle.format(cert.I[i]));
  j["I_sample"] = sample;
  return j;
}

json bundle_json(const gz::VerdictBundle& b) {
  json j;
  j["filter_base"] = verdict_json(b.filter_base);
  j["hausdorff"] = verdict_json(b.hausdorff);
  j["shift_continuity"] = verdict_json(b.shift_continuity);
  j["locally_compact"] = verdict_json(b.locally_compact);
  j["compact"] = verdict_json(b.compact);
  j["not_discrete"] = b.not_discrete;
  return j;
}

gz::SubsetSpec subset_for(const RunConfig& cfg, const gz::GroupPtr& oracle,
                          bool complement_default_b, std::string* a_name,
                          std::string* b_name, gz::SubsetSpec* b_out) {
  if (cfg.subset_a.empty())
    throw gz::PreconditionError("this command needs --A <subset literal>");
  gz::SubsetSpec A = gz::parse_subset_literal(cfg.subset_a, oracle);
  if (a_name) *a_name = A.name;
  if (b_out) {
    if (cfg.subset_b.empty()) {
      if (!complement_default_b)
        throw gz::PreconditionError("this command needs --B <subset literal>");
      *b_out = gz::subsets::complement(A);
    } else {
      *b_out = gz::parse_subset_literal(cfg.subset_b, oracle);
    }
    if (b_name) *b_name = b_out->name;
  }
  return A;
}

// ---- command bodies -------------------------------------------------------

json run_ends(const RunConfig& cfg, int* exit_code) {
  auto oracle = oracle_for(cfg);
  gz::EndsReport rep =
      gz::ends_estimate(oracle, cfg.rmax, cfg.window, cfg.element_cap);
  json out;
  out["classification"] = gz::to_string(rep.classification);
  if (rep.stabilized_count) out["stabilized_count"] = *rep.stabilized_count;
  json counts = json::array();
  for (auto& [r, c] : rep.counts_by_radius)
    counts.push_back({{"r", r},
                      {"outer_radius", rep.outer_radius_used.at(r)},
                      {"touching_components", c}});
  out["counts_by_radius"] = counts;
  out["saturated"] = rep.saturated;
  if (rep.saturated) out["saturation_radius"] = rep.saturation_radius;
  if (!rep.note.empty()) out["note"] = rep.note;
  out["evidence"] =
      "touching components of wide annuli; a proxy for ends at scale";
  (void)exit_code;
  return out;
}

json run_stability(const RunConfig& cfg, int* exit_code) {
  auto oracle = oracle_for(cfg);
  gz::SubsetSpec A = subset_for(cfg, oracle, true, nullptr, nullptr, nullptr);
  json out;
  out["subset"] = A.name;
  out["tag"] = gz::to_string(A.tag);
  if (!cfg.x_expr.empty()) {
    gz::Element x = oracle->parse(cfg.x_expr);
    out["profile_x"] = oracle->format(x);
    out["profile"] = profile_json(
        gz::symdiff_profile(oracle, A, x, cfg.rmax, cfg.element_cap));
  }
  gz::AlmostStabilityReport rep =
      gz::classify_almost_stable(oracle, A, cfg.rmax, cfg.element_cap);
  out["almost_stable_at_scale"] = rep.almost_stable;
  out["size_class"] = gz::to_string(rep.size_class);
  out["scale"] = gz::to_string(rep.scale);
  out["r_max"] = rep.r_max;
  json gens = json::array();
  for (auto& gv : rep.per_generator) {
    json g;
    g["generator"] = gv.generator;
    g["profile"] = profile_json(gv.profile);
    gens.push_back(g);
  }
  out["per_generator"] = gens;
  if (!rep.unresolved_generators.empty())
    out["unresolved_generators"] = rep.unresolved_generators;
  (void)exit_code;
  return out;
}

json run_witness(const RunConfig& cfg, int* exit_code) {
  auto oracle = oracle_for(cfg);
  gz::SubsetSpec B;
  std::string an, bn;
  gz::SubsetSpec A = subset_for(cfg, oracle, true, &an, &bn, &B);
  json out;
  out["A"] = an;
  out["B"] = bn;
  auto run_side = [&](gz::WitnessSide side) {
    auto res = gz::witness_search(oracle, A, B, cfg.r, cfg.m, side,
                                  cfg.element_cap);
    json j;
    j["candidates_tried"] = res.candidates_tried;
    if (res.certificate) {
      j["found"] = true;
      j["certificate"] = certificate_json(*oracle, *res.certificate);
      j["verification_failures"] =
          gz::verify_certificate(*oracle, *res.certificate, A, B);
    } else {
      j["found"] = false;
      j["verdict"] = "NotFoundAtScale";
    }
    return j;
  };
  if (cfg.side == "right" || cfg.side == "both")
    out["right"] = run_side(gz::WitnessSide::Right);
  if (cfg.side == "left" || cfg.side == "both")
    out["left"] = run_side(gz::WitnessSide::Left);
  (void)exit_code;
  return out;
}

json run_witness_cyclic(const RunConfig& cfg, int* exit_code) {
  auto oracle = oracle_for(cfg);
  gz::SubsetSpec B;
  std::string an, bn;
  gz::SubsetSpec A = subset_for(cfg, oracle, true, &an, &bn, &B);
  gz::Element z = cfg.z_expr.empty() ? oracle->axis()
                                     : oracle->parse(cfg.z_expr);
  auto rep =
      gz::witness_via_cyclic(oracle, z, A, B, cfg.r, cfg.m, cfg.element_cap);
  json out;
  out["A"] = an;
  out["B"] = bn;
  out["z"] = oracle->format(z);
  out["branch"] = gz::to_string(rep.branch);
  out["J_plus_size"] = rep.j_plus_size;
  out["J_minus_size"] = rep.j_minus_size;
  if (rep.base_a) out["a"] = oracle->format(*rep.base_a);
  if (rep.base_b) out["b"] = oracle->format(*rep.base_b);
  out["detail"] = rep.detail;
  if (rep.certificate) {
    out["certificate"] = certificate_json(*oracle, *rep.certificate);
    out["verification_failures"] =
        gz::verify_certificate(*oracle, *rep.certificate, A, B);
    out["meets_threshold"] = rep.certificate->size() >= cfg.m;
  }
  (void)exit_code;
  return out;
}

json run_prop10(const RunConfig& cfg, int* exit_code) {
  auto oracle = oracle_for(cfg);
  auto part = gz::stable_partition_locally_finite(oracle, cfg.depth);
  json out;
  out["depth"] = part.depth;
  json levels = json::array();
  for (std::size_t n = 0; n < part.level_sizes.size(); ++n) {
    json lv;
    lv["n"] = n;
    lv["size"] = part.level_sizes[n];
    lv["A"] = part.a_sizes[n];
    lv["B"] = part.b_sizes[n];
    if (n < part.transversals.size())
      lv["transversal_size"] = part.transversals[n].size();
    levels.push_back(lv);
  }
  out["levels"] = levels;
  out["construction_verified"] = true;  // the constructor throws otherwise
  auto cls = gz::classify_almost_stable(oracle, part.A, -1, cfg.element_cap);
  out["A_almost_stable_at_scale"] = cls.almost_stable;
  out["A_size_class"] = gz::to_string(cls.size_class);
  (void)exit_code;
  return out;
}

json run_topology(const RunConfig& cfg, int* exit_code) {
  auto oracle = oracle_for(cfg);
  if (cfg.topology.empty())
    throw gz::PreconditionError("this command needs --topology <spec>");
  auto spec = gz::parse_topology_spec(cfg.topology, oracle);
  json out;
  out["spec"] = spec.label;
  out["family"] = gz::to_string(spec.family);
  gz::VerdictBundle vb = gz::full_bundle(spec, cfg.big_r);
  out["bundle"] = bundle_json(vb);
  out["zero_ideal"] = verdict_json(gz::zero_ideal_check(oracle, cfg.big_r));
  bool pre = vb.hausdorff.status == gz::TopoStatus::Proven &&
             vb.shift_continuity.status == gz::TopoStatus::Proven &&
             vb.locally_compact.status == gz::TopoStatus::Proven;
  if (pre) {
    auto cls = gz::classify_dichotomy(spec, cfg.big_r);
    out["classification"] = gz::to_string(cls.cls);
    out["consistency"] = cls.consistent ? "CONSISTENT" : "VIOLATION";
    out["consistency_note"] = cls.note;
    if (!cls.consistent) *exit_code = 2;
    out["semigroup_continuity"] =
        verdict_json(gz::check_semigroup_continuity(spec, cfg.big_r));
  } else {
    out["classification"] = "not classified: bundle preconditions failed";
  }
  return out;
}

json run_census(const RunConfig& cfg, int* exit_code) {
  auto census = gz::zero_topology_census_on_Z(cfg.big_r, cfg.element_cap);
  json out;
  out["scale"] = census.scale;
  json entries = json::array();
  for (auto& e : census.entries) {
    json je;
    je["topology"] = e.label;
    je["bundle"] = bundle_json(e.bundle);
    je["classification"] = gz::to_string(e.classification);
    je["consistent"] = e.consistent;
    je["semigroup_continuity"] = verdict_json(e.semigroup);
    if (!e.consistent) *exit_code = 2;
    entries.push_back(je);
  }
  out["topologies"] = entries;
  out["semigroup_count"] = census.semigroup_count;
  out["all_distinct"] = census.all_distinct;
  out["distinctness"] = census.distinctness_witnesses;
  out["caveats"] = census.caveats;
  return out;
}

json run_consistency(const RunConfig& cfg, int* exit_code) {
  auto oracle = oracle_for(cfg);
  std::vector<gz::PartitionInstance> instances;
  for (std::uint64_t i = 0; i < cfg.count; ++i) {
    std::uint64_t seed = cfg.seed + i;
    gz::SubsetSpec A;
    if (cfg.kind == "annulus")
      A = gz::subsets::seeded_annulus_side(oracle, seed);
    else if (cfg.kind == "hash")
      A = gz::subsets::hash_side(oracle, seed);
    else
      throw gz::PreconditionError("unknown partition kind '" + cfg.kind + "'");
    instances.push_back(
        {A.name, A, gz::subsets::complement(A)});
  }
  auto rep = gz::flexibility_consistency(oracle, instances, cfg.r, cfg.m,
                                         cfg.element_cap);
  json out;
  out["declared_class"] = gz::to_string(oracle->flexibility_class());
  out["partitions"] = cfg.count;
  out["valid_instances"] = rep.valid_count;
  out["inconsistent"] = rep.inconsistent_count;
  json findings = json::array();
  for (auto& f : rep.findings) {
    json jf;
    jf["partition"] = f.name;
    jf["valid_instance"] = f.valid_instance;
    if (!f.valid_instance) {
      jf["rejected"] = f.invalid_reason;
      findings.push_back(jf);
      continue;
    }
    if (oracle->has_chain()) {
      jf["chain_bounded_evidence"] = f.chain_bounded_evidence;
      jf["chain_max_bound"] = f.chain_max_bound;
    } else {
      if (f.right) jf["right"] = certificate_json(*oracle, *f.right);
      if (f.left) jf["left"] = certificate_json(*oracle, *f.left);
      jf["size_at_half_radius"] = f.size_at_half;
      jf["size_at_full_radius"] = f.size_at_full;
      jf["scale_robust"] = f.scale_robust;
    }
    jf["A_almost_stable"] = f.almost_stable_A;
    jf["A_size_class"] = gz::to_string(f.size_class_A);
    jf["inconsistent"] = f.inconsistent;
    if (f.inconsistent) jf["reason"] = f.reason;
    findings.push_back(jf);
  }
  out["findings"] = findings;
  out["caveats"] = rep.caveats;
  if (rep.inconsistent_count > 0) *exit_code = 2;
  return out;
}

}  // namespace

std::size_t element_cap_from_env() {
  if (const char* env = std::getenv("GZ0_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return gz::kDefaultElementCap;
}

RunOutcome run(const std::string& command, const RunConfig& cfg) {
  RunOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  out.report["artifact"] = {{"name", kArtifactName},
                            {"version", kArtifactVersion}};
  out.report["command"] = command;
  out.report["config"] = config_json(cfg);
  out.report["seed"] = cfg.seed;
  try {
    json results;
    if (command == "ends") results = run_ends(cfg, &out.exit_code);
    else if (command == "stability") results = run_stability(cfg, &out.exit_code);
    else if (command == "witness") results = run_witness(cfg, &out.exit_code);
    else if (command == "witness-cyclic")
      results = run_witness_cyclic(cfg, &out.exit_code);
    else if (command == "prop10") results = run_prop10(cfg, &out.exit_code);
    else if (command == "topology") results = run_topology(cfg, &out.exit_code);
    else if (command == "census") results = run_census(cfg, &out.exit_code);
    else if (command == "consistency")
      results = run_consistency(cfg, &out.exit_code);
    else
      throw gz::PreconditionError("unknown command '" + command + "'");
    out.report["results"] = results;
    out.report["status"] = out.exit_code == 2 ? "violation" : "ok";
  } catch (const gz::ResourceCapError& e) {
    out.report["status"] = "error";
    out.report["error"] = e.what();
    out.report["projected_size"] = e.projected_size;
    out.exit_code = 1;
  } catch (const std::exception& e) {
    out.report["status"] = "error";
    out.report["error"] = e.what();
    out.exit_code = 1;
  }
  auto t1 = std::chrono::steady_clock::now();
  out.report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (!cfg.json_path.empty()) {
    std::ofstream f(cfg.json_path);
    f << out.report.dump(2) << "\n";
  }
  return out;
}

}  // namespace gz0
