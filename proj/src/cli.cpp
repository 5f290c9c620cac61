#include "leflab/cli.hpp"

#include "leflab/lefschetz.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

namespace leflab::cli {

using io::json;

namespace {

std::optional<std::filesystem::path> cache_directory(const Options& opt,
                                                     std::vector<std::string>& warnings) {
  std::string dir;
  if (opt.cache_dir) {
    dir = *opt.cache_dir;
  } else if (const char* env = std::getenv("LEFLAB_CACHE")) {
    dir = env;
  }
  if (dir.empty()) return std::nullopt;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  // Degrade to no-cache when the directory cannot be used.
  const std::filesystem::path probe = std::filesystem::path(dir) / ".write_probe";
  std::ofstream test(probe);
  if (!test) {
    warnings.push_back("cache directory not writable, running without cache: " + dir);
    return std::nullopt;
  }
  test.close();
  std::filesystem::remove(probe, ec);
  return std::filesystem::path(dir);
}

std::optional<LieBasis> cache_lookup(const std::optional<std::filesystem::path>& dir,
                                     const std::string& key,
                                     std::vector<std::string>& warnings) {
  if (!dir) return std::nullopt;
  const auto file = *dir / (key + ".json");
  if (!std::filesystem::exists(file)) return std::nullopt;
  try {
    return io::lie_basis_from_json(io::read_json_file(file));
  } catch (const std::exception& e) {
    warnings.push_back("ignoring corrupted cache entry " + file.string());
    return std::nullopt;
  }
}

void cache_store(const std::optional<std::filesystem::path>& dir, const std::string& key,
                 const LieBasis& basis, std::vector<std::string>& warnings) {
  if (!dir) return;
  try {
    io::write_json_file(*dir / (key + ".json"), io::lie_basis_to_json(basis));
  } catch (const std::exception& e) {
    warnings.push_back(std::string("cache store failed: ") + e.what());
  }
}

json signature_to_json(const Signature& s) {
  return json::array({s.positive, s.negative, s.zero});
}

struct CommandResult {
  json results;
  std::vector<std::string> checks;
  std::vector<std::string> notices;  // sampling/escalation context, not part of results
  bool verdict_ok = true;
  bool cached = false;
};

CommandResult run_signature(const json& input, const Options&) {
  const IntLattice l = io::lattice_from_json(input);
  CommandResult r;
  r.results["signature"] = signature_to_json(l.signature());
  r.results["even"] = l.is_even();
  r.results["det"] = io::rational_to_json(Rational(l.det()));
  r.results["rank"] = l.rank;
  r.checks = {"signature by exact symmetric congruence elimination",
              "determinant by exact elimination"};
  return r;
}

CommandResult run_ns_lie(const json& input, const Options& opt,
                         const std::optional<std::filesystem::path>& cache,
                         std::vector<std::string>& warnings) {
  if (!input.contains("ns_gram")) throw Error("ns-lie input needs ns_gram");
  const RatMatrix q = io::rat_matrix_from_json(input.at("ns_gram"));
  if (!is_symmetric(q)) throw Error("ns-lie: ns_gram must be symmetric");
  if (determinant(q) == 0) throw Error("ns-lie: ns_gram must be nondegenerate");
  const Index rho = q.rows();
  const GradedAlgebra alg = mukai_extension_algebra(rho, q);

  std::vector<CohClass> kappas;
  if (input.contains("kappas")) {
    for (const json& k : input.at("kappas")) {
      RatVector v = RatVector::Zero(alg.total_dim());
      const RatVector coeffs = io::rat_vector_from_json(k);
      if (coeffs.size() != rho) throw Error("ns-lie: kappa length must equal the NS rank");
      v.segment(1, rho) = coeffs;
      kappas.push_back(alg.make_class(v));
    }
  } else {
    for (Index i = 0; i < rho; ++i) kappas.push_back(alg.basis_class(1 + i));
  }

  const json cache_key_src{{"command", "ns-lie"}, {"input", input}, {"seed", opt.seed}};
  const std::string key = io::content_hash(cache_key_src);

  CommandResult r;
  LieBasis closure;
  if (auto hit = cache_lookup(cache, key, warnings)) {
    closure = std::move(*hit);
    r.cached = true;
  } else {
    NsLieResult res = neron_severi_lie(alg, 2, kappas, opt.seed);
    closure = std::move(res.algebra);
    r.notices = res.notices;
    cache_store(cache, key, closure, warnings);
  }

  const Index expected = (rho + 2) * (rho + 1) / 2;
  r.results["dim"] = closure.dim();
  r.results["expected_so_dim"] = expected;
  r.results["closed"] = closure.closed;

  json weights = json::object();
  bool eigenvalues_ok = true;
  const auto parts = graded_decompose(closure, grading_operator(alg, 2));
  for (const auto& p : parts) {
    weights[std::to_string(p.weight)] = p.basis.size();
    if (p.weight != -2 && p.weight != 0 && p.weight != 2) eigenvalues_ok = false;
  }
  r.results["adh_weights"] = weights;
  const bool form_ok = preserves_form(closure, mukai_extension_form(q, -1));
  r.results["preserves_extended_form"] = form_ok;

  r.verdict_ok = closure.closed && closure.dim() == expected && eigenvalues_ok && form_ok;
  r.results["verdict"] = r.verdict_ok ? "so-dimension reached" : "mismatch";
  r.checks = {"closure is bracket-closed", "dim g equals dim so(rho + 2)",
              "ad-h eigenvalues within {-2, 0, 2}",
              "closure preserves the extension pairing (e-eta = -1 normalization)"};
  return r;
}

CommandResult run_mukai_density(const json& input, const Options& opt) {
  std::optional<GradedAlgebra> alg;
  if (input.contains("hypersurface")) {
    const json& h = input.at("hypersurface");
    alg.emplace(hypersurface_even_ring(h.at("n").get<Index>(), h.at("d").get<Index>()));
  } else if (input.contains("algebra")) {
    alg.emplace(io::algebra_from_json(input.at("algebra")));
  } else {
    throw Error("mukai-density input needs hypersurface or algebra");
  }

  // Default exponent range: +- dim H^even, extendable by flag.
  long lo = -alg->total_dim(), hi = alg->total_dim();
  if (opt.range) {
    lo = opt.range->first;
    hi = opt.range->second;
  }
  CohClass ample = alg->zero_class();
  for (Index i = 0; i < alg->degree_dim(1); ++i)
    ample = ample + alg->basis_class(alg->degree_start(1) + i);

  std::vector<CohClass> deltas;
  for (long k = lo; k <= hi; ++k) deltas.push_back(line_bundle_mukai_vector(*alg, ample, k));
  deltas.push_back(alg->eta());

  const DensityReport rep = density_certificate(*alg, deltas);
  CommandResult r;
  r.results = io::density_report_to_json(rep, deltas);
  r.results["exponent_range"] = json::array({lo, hi});
  r.verdict_ok = rep.dense && rep.in_sp && rep.orbit_spans;
  r.checks = {"nilpotent generators lie in sp of the Mukai pairing",
              "closure dimension equals g(2g+1)",
              "orbit witness {eta, r_delta(eta)} spans H^even"};
  return r;
}

CommandResult run_k3_mirror(const json& input, const Options&) {
  const IntLattice l = k3_lattice();
  if (!input.contains("m_columns") || !input.contains("u_columns"))
    throw Error("k3-mirror input needs m_columns and u_columns");
  auto embed = [&](const json& cols) {
    IntMatrix m(l.rank, static_cast<Index>(cols.size()));
    for (Index c = 0; c < m.cols(); ++c) {
      const RatVector col = io::rat_vector_from_json(cols[static_cast<size_t>(c)]);
      if (col.size() != l.rank) throw Error("k3-mirror: column length must be 22");
      for (Index rr = 0; rr < l.rank; ++rr) {
        if (!is_integral(col(rr))) throw Error("k3-mirror: columns must be integral");
        m(rr, c) = numerator(col(rr));
      }
    }
    return Embedding(l, m);
  };
  const Embedding m = embed(input.at("m_columns"));
  const Embedding ucopy = embed(input.at("u_columns"));
  const Embedding mirror = mirror_partner(l, m, ucopy);

  CommandResult r;
  const Signature sm = m.sublattice().signature();
  const Signature sv = mirror.sublattice().signature();
  r.results["m_signature"] = signature_to_json(sm);
  r.results["mirror_signature"] = signature_to_json(sv);
  r.results["mirror_rank"] = mirror.sub_rank();
  r.results["mirror_gram"] = io::matrix_to_json(mirror.sublattice().gram);
  r.results["mirror_primitive"] = is_primitive(mirror);
  r.results["rank_sum"] = m.sub_rank() + ucopy.sub_rank() + mirror.sub_rank();

  const bool signature_ok = sv.positive == 1 && sv.zero == 0 &&
                            sm.positive == 1 && sv.negative == 18 - sm.negative;
  r.verdict_ok = signature_ok && is_primitive(mirror) &&
                 m.sub_rank() + ucopy.sub_rank() + mirror.sub_rank() == 22;
  r.checks = {"blocks pairwise orthogonal with full rank 22",
              "mirror primitive (unit elementary divisors)",
              "signature (1, 18 - s)"};
  return r;
}

CommandResult run_abelian_mirror(const json& input, const Options& opt) {
  if (!input.contains("torus") || !input.contains("omega"))
    throw Error("abelian-mirror input needs torus and omega");
  const TorusData a = io::torus_from_json(input.at("torus"));
  const KahlerParam w = io::kahler_from_json(input.at("omega"));
  validate_kahler(a, w);

  SearchBudget budget;
  if (opt.budget) budget.max_steps = *opt.budget;
  if (input.contains("box")) budget.box = input.at("box").get<long>();

  CommandResult r;
  const auto pair = construct_mirror(a, w, budget);
  if (!pair) {
    r.results["split"] = "budget exhausted";
    r.verdict_ok = false;
    r.checks = {"isotropic invariant split search (inconclusive)"};
    return r;
  }
  r.results["mirror_torus"] = io::torus_to_json(pair->b);
  r.results["mirror_omega"] = io::kahler_to_json(pair->wb);
  r.results["certificate"] = io::mirror_certificate_to_json(pair->cert);
  r.results["gamma1"] = io::matrix_to_json(pair->split.gamma1);
  r.results["gamma2"] = io::matrix_to_json(pair->split.gamma2);
  r.verdict_ok = pair->cert.all_passed();
  r.checks = {"alpha unimodular and a Q-isometry",
              "alpha J_{AxA^} = I_{omega_B} alpha",
              "alpha I_{omega_A} = J_{BxB^} alpha",
              "I_omega contract (square, isometry, commutation, factorization)",
              "E-form positive definite on the recovered omega_B"};
  return r;
}

CommandResult run_stabilizer_lie(const json& input, const Options& opt,
                                 const std::optional<std::filesystem::path>& cache,
                                 std::vector<std::string>& warnings) {
  if (!input.contains("lattice") || !input.contains("columns"))
    throw Error("stabilizer-lie input needs lattice and columns");
  const IntLattice l = io::lattice_from_json(input.at("lattice"));
  const json& cols = input.at("columns");
  IntMatrix m(l.rank, static_cast<Index>(cols.size()));
  for (Index c = 0; c < m.cols(); ++c) {
    const RatVector col = io::rat_vector_from_json(cols[static_cast<size_t>(c)]);
    if (col.size() != l.rank) throw Error("stabilizer-lie: column length mismatch");
    for (Index rr = 0; rr < l.rank; ++rr) m(rr, c) = numerator(col(rr));
  }
  const Embedding e(l, m);

  const json cache_key_src{{"command", "stabilizer-lie"}, {"input", input}};
  const std::string key = io::content_hash(cache_key_src);

  CommandResult r;
  LieBasis basis;
  if (auto hit = cache_lookup(cache, key, warnings)) {
    basis = std::move(*hit);
    r.cached = true;
  } else {
    basis = pointwise_stabilizer_lie(l, e);
    cache_store(cache, key, basis, warnings);
  }
  r.results["dim"] = basis.dim();
  r.results["closed"] = basis.closed;

  const IntLattice sub = e.sublattice();
  if (sub.is_nondegenerate()) {
    const Index rr = l.rank - e.sub_rank();
    r.results["expected_so_dim"] = rr * (rr - 1) / 2;
    r.verdict_ok = basis.dim() == rr * (rr - 1) / 2;
  }
  r.checks = {"basis annihilates the sublattice",
              "basis infinitesimally preserves the Gram form",
              "dimension equals dim so(M-perp) for nondegenerate M"};
  return r;
}

}  // namespace

bool known_command(const std::string& name) {
  return name == "signature" || name == "ns-lie" || name == "mukai-density" ||
         name == "k3-mirror" || name == "abelian-mirror" || name == "stabilizer-lie";
}

Outcome run(const Options& opt) {
  Outcome out;
  out.report["command"] = opt.command;
  out.report["version"] = kVersion;
  out.report["seed"] = opt.seed;

  const auto started = std::chrono::steady_clock::now();
  std::vector<std::string> warnings;
  try {
    if (!known_command(opt.command)) throw Error("unknown command: " + opt.command);
    const json input = io::read_json_file(opt.input_path);
    out.report["inputs"] = json{{opt.input_path, io::content_hash(input)}};

    const auto cache = cache_directory(opt, warnings);
    CommandResult res;
    if (opt.command == "signature") {
      res = run_signature(input, opt);
    } else if (opt.command == "ns-lie") {
      res = run_ns_lie(input, opt, cache, warnings);
    } else if (opt.command == "mukai-density") {
      res = run_mukai_density(input, opt);
    } else if (opt.command == "k3-mirror") {
      res = run_k3_mirror(input, opt);
    } else if (opt.command == "abelian-mirror") {
      res = run_abelian_mirror(input, opt);
    } else {
      res = run_stabilizer_lie(input, opt, cache, warnings);
    }
    out.report["results"] = res.results;
    out.report["checks"] = res.checks;
    out.report["notices"] = res.notices;
    out.report["cached"] = res.cached;
    out.exit_code = res.verdict_ok ? 0 : 1;
  } catch (const std::exception& e) {
    out.report["error"] = e.what();
    out.exit_code = 2;
  }
  out.report["warnings"] = warnings;
  out.report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - started)
                                .count();

  if (opt.out_path) {
    try {
      io::write_json_file(*opt.out_path, out.report);
    } catch (const std::exception& e) {
      out.report["error"] = e.what();
      out.exit_code = 2;
    }
  }
  return out;
}

}  // namespace leflab::cli
