#include "leflab/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>

namespace leflab::io {

json rational_to_json(const Rational& q) {
  if (is_integral(q) && numerator(q) >= std::numeric_limits<std::int64_t>::min() &&
      numerator(q) <= std::numeric_limits<std::int64_t>::max())
    return numerator(q).convert_to<std::int64_t>();
  return to_string(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw Error("expected an integer or a \"p/q\" string, got " + j.dump());
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index jx = 0; jx < m.cols(); ++jx) row.push_back(rational_to_json(m(i, jx)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const IntMatrix& m) { return matrix_to_json(to_rational(m)); }

RatMatrix rat_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw Error("expected a non-empty list of rows: " + j.dump());
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j.front().size());
  RatMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (static_cast<Index>(row.size()) != cols) throw Error("ragged matrix rows");
    for (Index c = 0; c < cols; ++c) m(i, c) = rational_from_json(row[static_cast<size_t>(c)]);
  }
  return m;
}

IntMatrix int_matrix_from_json(const json& j) { return to_integer(rat_matrix_from_json(j)); }

RatVector rat_vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a list of scalars");
  RatVector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = rational_from_json(j[static_cast<size_t>(i)]);
  return v;
}

json vector_to_json(const RatVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

json lattice_to_json(const IntLattice& l) {
  return json{{"rank", l.rank}, {"gram", matrix_to_json(l.gram)}};
}

IntLattice lattice_from_json(const json& j) {
  if (!j.contains("rank") || !j.contains("gram")) throw Error("lattice file needs rank and gram");
  const IntLattice l(int_matrix_from_json(j.at("gram")));
  if (l.rank != j.at("rank").get<Index>()) throw Error("lattice rank does not match gram size");
  return l;
}

json embedding_to_json(const Embedding& e) {
  json cols = json::array();
  for (Index c = 0; c < e.columns.cols(); ++c) {
    json col = json::array();
    for (Index r = 0; r < e.columns.rows(); ++r)
      col.push_back(rational_to_json(Rational(e.columns(r, c))));
    cols.push_back(std::move(col));
  }
  return json{{"ambient", lattice_to_json(e.ambient)}, {"columns", cols}};
}

Embedding embedding_from_json(const json& j) {
  if (!j.contains("ambient") || !j.contains("columns"))
    throw Error("embedding file needs ambient and columns");
  const IntLattice ambient = lattice_from_json(j.at("ambient"));
  const json& cols = j.at("columns");
  IntMatrix m(ambient.rank, static_cast<Index>(cols.size()));
  for (Index c = 0; c < m.cols(); ++c) {
    const RatVector col = rat_vector_from_json(cols[static_cast<size_t>(c)]);
    if (col.size() != ambient.rank) throw Error("embedding column length mismatch");
    for (Index r = 0; r < ambient.rank; ++r) {
      if (!is_integral(col(r))) throw Error("embedding columns must be integral");
      m(r, c) = numerator(col(r));
    }
  }
  return Embedding(ambient, m);
}

json algebra_to_json(const GradedAlgebra& a) {
  json products = json::array();
  const auto& mult = a.multiplication_table();
  for (Index i = 1; i < a.total_dim(); ++i)
    for (Index jx = i; jx < a.total_dim(); ++jx) {
      const RatVector prod = mult[static_cast<size_t>(i)].col(jx);
      if (prod != RatVector::Zero(a.total_dim()).eval())
        products.push_back(json::array({i, jx, vector_to_json(prod)}));
    }
  json out{{"degree_dims", a.degree_dims()},
           {"labels", a.labels()},
           {"products", products},
           {"integral", vector_to_json(a.integral_vector())}};
  if (a.has_chern()) {
    json chern = json::array();
    for (const CohClass& c : a.chern_classes()) chern.push_back(vector_to_json(c.coeffs));
    out["chern"] = chern;
  }
  return out;
}

GradedAlgebra algebra_from_json(const json& j) {
  for (const char* key : {"degree_dims", "products", "integral"})
    if (!j.contains(key)) throw Error(std::string("algebra file needs ") + key);
  std::vector<Index> dims = j.at("degree_dims").get<std::vector<Index>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<std::tuple<Index, Index, RatVector>> products;
  for (const json& p : j.at("products")) {
    if (!p.is_array() || p.size() != 3) throw Error("product entries are [i, j, coeffs]");
    products.emplace_back(p[0].get<Index>(), p[1].get<Index>(), rat_vector_from_json(p[2]));
  }
  std::vector<RatVector> chern;
  if (j.contains("chern"))
    for (const json& c : j.at("chern")) chern.push_back(rat_vector_from_json(c));
  return GradedAlgebra(std::move(dims), std::move(labels), products,
                       rat_vector_from_json(j.at("integral")), std::move(chern));
}

json torus_to_json(const TorusData& t) {
  return json{{"n", t.n}, {"J", matrix_to_json(t.j)}};
}

TorusData torus_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("J")) throw Error("torus file needs n and J");
  return TorusData(j.at("n").get<Index>(), rat_matrix_from_json(j.at("J")));
}

json kahler_to_json(const KahlerParam& w) {
  return json{{"phi1", matrix_to_json(w.phi1.gram)}, {"phi2", matrix_to_json(w.phi2.gram)}};
}

KahlerParam kahler_from_json(const json& j) {
  if (!j.contains("phi1") || !j.contains("phi2"))
    throw Error("Kahler parameter needs phi1 and phi2");
  return KahlerParam{NSForm{rat_matrix_from_json(j.at("phi1"))},
                     NSForm{rat_matrix_from_json(j.at("phi2"))}};
}

json lie_basis_to_json(const LieBasis& b) {
  json basis = json::array();
  for (const RatMatrix& m : b.basis) basis.push_back(vector_to_json(vectorize(m)));
  return json{{"dim", b.dim()}, {"basis", basis}, {"closed", b.closed},
              {"ambient_dim", b.ambient_dim}};
}

LieBasis lie_basis_from_json(const json& j) {
  for (const char* key : {"dim", "basis", "closed", "ambient_dim"})
    if (!j.contains(key)) throw Error(std::string("closure file needs ") + key);
  const Index d = j.at("ambient_dim").get<Index>();
  std::vector<RatMatrix> mats;
  for (const json& v : j.at("basis")) mats.push_back(unvectorize(rat_vector_from_json(v), d, d));
  LieBasis out = span_basis(mats, ClosurePolicy::leave_open);
  out.closed = j.at("closed").get<bool>();
  if (out.dim() != j.at("dim").get<Index>())
    throw Error("closure file dimension does not match basis");
  return out;
}

json density_report_to_json(const DensityReport& r, const std::vector<CohClass>& deltas) {
  json gens = json::array();
  for (const CohClass& d : deltas) gens.push_back(vector_to_json(d.coeffs));
  return json{{"closure_dim", r.closure_dim},    {"sp_dim", r.sp_dim},
              {"orbit_span_rank", r.orbit_span_rank}, {"orbit_spans", r.orbit_spans},
              {"in_sp", r.in_sp},                {"dense", r.dense},
              {"generators", gens}};
}

json mirror_certificate_to_json(const MirrorCertificate& c) {
  return json{{"alpha", matrix_to_json(c.alpha)},
              {"unimodular", c.unimodular},
              {"isometry", c.isometry},
              {"intertwine_ab", c.intertwine_ab},
              {"intertwine_ba", c.intertwine_ba},
              {"passed", c.all_passed()}};
}

std::string content_hash(const json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace leflab::io
