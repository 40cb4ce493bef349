#pragma once

// Running the pipeline on a parsed system and serializing the results.

#include <string>
#include <vector>

#include <json.hpp>

#include "zdgb/assemble.hpp"
#include "zdgb/system_file.hpp"

namespace zdgb {

using Json = nlohmann::ordered_json;

/// Generators as elements of (K[x1])[x~].
std::vector<RPoly> tilde_generators(const Problem& p);
RPoly to_tilde(const Problem& p, const FieldPoly& f);

std::string render_u(const Problem& p, const UPoly& u);
/// Integer-cleared display form of a polynomial of (K[x1])[x~].
std::string render_display(const Problem& p, const RPoly& f);
std::string render_display(const Problem& p, const FieldPoly& f);

Json upoly_json(const Problem& p, const UPoly& u);
Json poly_json(const Problem& p, const FieldPoly& f);

/// The lifted elements of the new basis: every branch basis together with its modulus.
std::vector<FieldPoly> new_basis_elements(const Problem& p, const NewBasis& nb);

Json input_json(const Problem& p);
Json elimination_json(const Problem& p, const Elimination& el);
Json membership_json(const Problem& p, const FieldPoly& f, const Membership& m);
Json oracle_json(const Problem& p, const std::vector<FieldPoly>& gb, const UPoly& chi);

}  // namespace zdgb
