#include <doctest.h>

#include "leflab/cli.hpp"
#include "leflab/lefschetz.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace leflab;
using io::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("leflab_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::filesystem::path write_input(const TempDir& dir, const std::string& name, const json& j) {
  const auto p = dir.path / name;
  io::write_json_file(p, j);
  return p;
}

cli::Options base_options(const std::string& command, const std::filesystem::path& input) {
  cli::Options opt;
  opt.command = command;
  opt.input_path = input.string();
  return opt;
}

}  // namespace

TEST_CASE("json round trips") {
  const IntLattice u = hyperbolic_plane();
  CHECK(io::lattice_from_json(io::lattice_to_json(u)) == u);

  const Embedding e = coordinate_embedding(direct_sum(u, u), 0, 2);
  const Embedding back = io::embedding_from_json(io::embedding_to_json(e));
  CHECK(back.columns == e.columns);
  CHECK(back.ambient == e.ambient);

  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  const GradedAlgebra xb = io::algebra_from_json(io::algebra_to_json(x));
  CHECK(xb.total_dim() == 4);
  CHECK(todd_class(xb) == todd_class(xb).alg->unit() +
                              (xb.basis_class(1) * xb.basis_class(1)) * Rational(5, 6));

  const auto [torus, s] = example_pair(1);
  const TorusData tb = io::torus_from_json(io::torus_to_json(torus));
  CHECK(tb.j == torus.j);

  const KahlerParam w{NSForm{s.gram}, NSForm{(Rational(2) * s.gram).eval()}};
  const KahlerParam wb = io::kahler_from_json(io::kahler_to_json(w));
  CHECK(wb.phi1.gram == w.phi1.gram);
  CHECK(wb.phi2.gram == w.phi2.gram);

  const LieBasis sl2 = lie_closure({polarization_sl2(torus, s).e, polarization_sl2(torus, s).f});
  const LieBasis lb = io::lie_basis_from_json(io::lie_basis_to_json(sl2));
  CHECK(lb.dim() == sl2.dim());
  CHECK(lb.row_span == sl2.row_span);
  CHECK(lb.closed == sl2.closed);

  // Rationals: integers stay integers, fractions go through strings.
  CHECK(io::rational_to_json(Rational(7)) == json(7));
  CHECK(io::rational_from_json(io::rational_to_json(Rational(22, 7))) == Rational(22, 7));
  CHECK_THROWS_AS(io::rational_from_json(json(1.5)), Error);
}

TEST_CASE("content hash is stable and input sensitive") {
  const json a{{"x", 1}, {"y", "2/3"}};
  const json b{{"y", "2/3"}, {"x", 1}};
  CHECK(io::content_hash(a) == io::content_hash(b));  // key order canonicalized
  json c = a;
  c["x"] = 2;
  CHECK(io::content_hash(a) != io::content_hash(c));
}

TEST_CASE("cli signature command") {
  TempDir dir;
  const auto input = write_input(dir, "k3.json", io::lattice_to_json(k3_lattice()));
  const cli::Outcome out = cli::run(base_options("signature", input));
  CHECK(out.exit_code == 0);
  CHECK(out.report.at("results").at("signature") == json::array({3, 19, 0}));
  CHECK(out.report.at("results").at("even") == true);
}

TEST_CASE("cli ns-lie command with cache") {
  TempDir dir;
  json input;
  input["ns_gram"] = json::array({json::array({0, 1, 0}), json::array({1, 0, 0}),
                                  json::array({0, 0, -2})});
  const auto path = write_input(dir, "ns.json", input);

  cli::Options opt = base_options("ns-lie", path);
  opt.cache_dir = (dir.path / "cache").string();
  const cli::Outcome first = cli::run(opt);
  CHECK(first.exit_code == 0);
  CHECK(first.report.at("results").at("dim") == 10);  // so(5)
  CHECK(first.report.at("results").at("expected_so_dim") == 10);
  CHECK(first.report.at("cached") == false);

  const cli::Outcome second = cli::run(opt);
  CHECK(second.exit_code == 0);
  CHECK(second.report.at("cached") == true);
  CHECK(second.report.at("results").at("dim") == 10);
  // Deterministic result payloads across runs.
  CHECK(first.report.at("results") == second.report.at("results"));

  // Different seed: different cache key, same mathematics.
  cli::Options reseeded = opt;
  reseeded.seed = 5;
  const cli::Outcome third = cli::run(reseeded);
  CHECK(third.report.at("cached") == false);
  CHECK(third.report.at("results").at("dim") == 10);

  // Corrupted cache entries are ignored and recomputed.
  for (const auto& entry : std::filesystem::directory_iterator(*opt.cache_dir))
    std::ofstream(entry.path()) << "{not json";
  const cli::Outcome fourth = cli::run(opt);
  CHECK(fourth.exit_code == 0);
  CHECK(fourth.report.at("cached") == false);
  CHECK(!fourth.report.at("warnings").empty());
}

TEST_CASE("cli mukai-density command") {
  TempDir dir;
  json input;
  input["hypersurface"] = json{{"n", 3}, {"d", 5}};
  const auto path = write_input(dir, "quintic.json", input);
  cli::Options opt = base_options("mukai-density", path);
  opt.range = {{-3, 3}};
  const cli::Outcome out = cli::run(opt);
  CHECK(out.exit_code == 0);
  CHECK(out.report.at("results").at("closure_dim") == 10);
  CHECK(out.report.at("results").at("sp_dim") == 10);
  CHECK(out.report.at("results").at("dense") == true);
  CHECK(out.report.at("results").at("orbit_span_rank") == 4);

  // The same command accepts a full algebra file.
  json byfile;
  byfile["algebra"] = io::algebra_to_json(hypersurface_even_ring(1, 3));
  const auto path2 = write_input(dir, "cubic.json", byfile);
  const cli::Outcome out2 = cli::run(base_options("mukai-density", path2));
  CHECK(out2.exit_code == 0);
  CHECK(out2.report.at("results").at("closure_dim") == 3);
  CHECK(out2.report.at("results").at("dense") == true);
}

TEST_CASE("cli k3-mirror command") {
  TempDir dir;
  json input;
  auto unit_cols = [](Index offset) {
    json cols = json::array();
    for (Index c = 0; c < 2; ++c) {
      json col = json::array();
      for (Index r = 0; r < 22; ++r) col.push_back(r == offset + c ? 1 : 0);
      cols.push_back(col);
    }
    return cols;
  };
  input["m_columns"] = unit_cols(16);
  input["u_columns"] = unit_cols(18);
  const auto path = write_input(dir, "mirror.json", input);
  const cli::Outcome out = cli::run(base_options("k3-mirror", path));
  CHECK(out.exit_code == 0);
  CHECK(out.report.at("results").at("mirror_signature") == json::array({1, 17, 0}));
  CHECK(out.report.at("results").at("mirror_primitive") == true);
  CHECK(out.report.at("results").at("rank_sum") == 22);
}

TEST_CASE("cli abelian-mirror command") {
  TempDir dir;
  const auto [torus, s] = example_pair(1);
  json input;
  input["torus"] = io::torus_to_json(torus);
  input["omega"] =
      io::kahler_to_json(KahlerParam{NSForm{RatMatrix::Zero(2, 2)}, NSForm{(Rational(2) * s.gram).eval()}});
  const auto path = write_input(dir, "torus.json", input);
  const cli::Outcome out = cli::run(base_options("abelian-mirror", path));
  CHECK(out.exit_code == 0);
  CHECK(out.report.at("results").at("certificate").at("passed") == true);

  // Budget exhaustion comes back as a failed-verdict exit code.
  cli::Options tiny = base_options("abelian-mirror", path);
  tiny.budget = 3;
  const cli::Outcome exhausted = cli::run(tiny);
  CHECK(exhausted.exit_code == 1);
  CHECK(exhausted.report.at("results").at("split") == "budget exhausted");
}

TEST_CASE("cli stabilizer-lie command") {
  TempDir dir;
  json input;
  input["lattice"] = io::lattice_to_json(direct_sum(hyperbolic_plane(), hyperbolic_plane()));
  input["columns"] = json::array({json::array({1, 0, 0, 0}), json::array({0, 1, 0, 0})});
  const auto path = write_input(dir, "stab.json", input);
  const cli::Outcome out = cli::run(base_options("stabilizer-lie", path));
  CHECK(out.exit_code == 0);
  CHECK(out.report.at("results").at("dim") == 1);
  CHECK(out.report.at("results").at("expected_so_dim") == 1);
}

TEST_CASE("cli error handling") {
  TempDir dir;
  // Malformed JSON exits with code 2.
  const auto bad = dir.path / "bad.json";
  std::ofstream(bad) << "{this is not json";
  const cli::Outcome out = cli::run(base_options("signature", bad));
  CHECK(out.exit_code == 2);
  CHECK(out.report.contains("error"));

  // Unknown command and missing file are invalid input as well.
  CHECK(cli::run(base_options("no-such-command", bad)).exit_code == 2);
  CHECK(cli::run(base_options("signature", dir.path / "missing.json")).exit_code == 2);

  // A valid lattice with a rank mismatch is rejected.
  json wrong = io::lattice_to_json(hyperbolic_plane());
  wrong["rank"] = 3;
  const auto path = write_input(dir, "wrong.json", wrong);
  CHECK(cli::run(base_options("signature", path)).exit_code == 2);
}

TEST_CASE("report is reproducible for identical inputs and seed") {
  TempDir dir;
  json input;
  input["ns_gram"] = json::array({json::array({2})});
  const auto path = write_input(dir, "rho1.json", input);
  const cli::Outcome a = cli::run(base_options("ns-lie", path));
  const cli::Outcome b = cli::run(base_options("ns-lie", path));
  CHECK(a.report.at("results") == b.report.at("results"));
  CHECK(a.report.at("results").at("dim") == 3);
}
