#ifndef LEFLAB_IO_HPP
#define LEFLAB_IO_HPP

#include "leflab/abelian.hpp"
#include "leflab/gradedring.hpp"
#include "leflab/lattices.hpp"
#include "leflab/liealg.hpp"
#include "leflab/sympdensity.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace leflab::io {

using nlohmann::json;

/// Exact scalars in JSON: plain integers where possible, "p/q" strings
/// otherwise. Floating point input is rejected.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json matrix_to_json(const RatMatrix& m);  // list of rows
json matrix_to_json(const IntMatrix& m);
RatMatrix rat_matrix_from_json(const json& j);
IntMatrix int_matrix_from_json(const json& j);
RatVector rat_vector_from_json(const json& j);
json vector_to_json(const RatVector& v);

// {"rank": n, "gram": [[...]]}
json lattice_to_json(const IntLattice& l);
IntLattice lattice_from_json(const json& j);

// {"ambient": <lattice>, "columns": [[...]]} with one entry per column
json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const json& j);

// {"degree_dims": [...], "labels": [...], "products": [[i, j, [coeffs]]...],
//  "integral": [coeffs], "chern": [[coeffs]...]}
json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const json& j);

// {"n": n, "J": [[...]]}
json torus_to_json(const TorusData& t);
TorusData torus_from_json(const json& j);

// {"phi1": [[...]], "phi2": [[...]]}
json kahler_to_json(const KahlerParam& w);
KahlerParam kahler_from_json(const json& j);

// {"dim": k, "basis": [[...]], "closed": true} with row-major flattening
json lie_basis_to_json(const LieBasis& b);
LieBasis lie_basis_from_json(const json& j);

// {"closure_dim": k, "sp_dim": t, "orbit_span_rank": r, "dense": bool,
//  "generators": [...]}
json density_report_to_json(const DensityReport& r, const std::vector<CohClass>& deltas);

json mirror_certificate_to_json(const MirrorCertificate& c);

/// Stable 64-bit FNV-1a hash of the canonical dump, as fixed-width hex.
std::string content_hash(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace leflab::io

#endif
