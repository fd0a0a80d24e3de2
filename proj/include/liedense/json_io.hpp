#pragma once

// JSON serialization of reports, modules, and symbolic fields.
//
// Schema conventions, shared by every writer:
//   - rationals are strings: "p" when integral, "p/q" otherwise;
//   - Gaussian rationals append the imaginary part with unit suffix 'i',
//     e.g. "1/2+3i", "-2i";
//   - vectors are arrays of such strings, matrices arrays of row arrays;
//   - objects preserve insertion order, so identical inputs serialize to
//     byte-identical text; nothing environment-dependent (timestamps, paths,
//     hostnames) is ever recorded.
//
// Module files have the layout
//   {"algebra": "B2", "dim": 5, "matrices": {"E1": [["0", ...], ...], ...}}
// with one matrix per basis label of the algebra.  The loader re-validates
// the homomorphism property before accepting; every failure (unreadable
// file, malformed JSON, missing or extra labels, shape or literal errors,
// non-homomorphism) is reported as a LoadError.

#include <json.hpp>

#include <string>

#include "liedense/certify.hpp"
#include "liedense/lie_algebra.hpp"
#include "liedense/polynomial.hpp"
#include "liedense/representation.hpp"
#include "liedense/root_system.hpp"

namespace liedense {

using Json = nlohmann::ordered_json;

// Primitives.
Json json_vec(const QVec& v);
Json json_mat(const QMat& m);
Json json_int_mat(const Eigen::MatrixXi& m);

// Root-system reports.
Json json_roots(const RootSystem& rs);
Json json_pairing(const RootSystem& rs);
Json json_lattice(const RootSystem& rs, int m_max);
Json json_momega(const MomegaReport& r);
Json json_even_coroot(const EvenCorootReport& r);

// Chevalley-basis export: basis labels plus the bracket table as sparse
// triples [i, j, [[k, "c"], ...]] over all ordered pairs with nonzero value.
Json json_chevalley(const LieAlgebra& g, const JacobiReport& jacobi);

// Generation and case-analysis reports.
Json json_certificate(const Certificate& c);
Json json_adjoint_cases(const AdjointCasesReport& r);
Json json_old_sl2(const OldSl2Report& r);
Json json_odd_weight_cases(const OddWeightCasesReport& r);
Json json_cartan_generation(const CartanGenerationReport& r);

// Symbolic polynomials as coefficient maps: exponent tuples joined with
// commas map to coefficient strings, e.g. {"2,0": "1", "0,1": "-1/2"}.
Json json_polynomial(const Polynomial& p);
Json json_polynomial_list(const std::vector<Polynomial>& ps);

// Modules.
Json json_representation(const Representation& rep);
Representation representation_from_json(const Json& j);
Representation load_representation_file(const std::string& path);
void save_representation_file(const Representation& rep, const std::string& path);

// Serializes with two-space indentation and a trailing newline.
std::string json_dump(const Json& j);
void write_json_file(const Json& j, const std::string& path);

}  // namespace liedense
