#pragma once

#include <string>
#include <vector>

#include "tailspec/families.hpp"
#include "tailspec/graph.hpp"
#include "tailspec/int_poly.hpp"
#include "tailspec/oracle.hpp"
#include "tailspec/tail_solver.hpp"

namespace tailspec {

// Graph JSON: {"n":3,"edges":[[1,2],[2,3],[1,3]],"anchor":1}, anchor optional.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Polynomial coefficients as decimal strings, lowest power first
// (arbitrary-precision values do not fit JSON numbers).
std::vector<std::string> coeff_strings(const IntPoly& p);

std::string to_json(const SpectrumReport& r);
std::string to_json(const FamilyReport& r);
std::string to_json(const TruncationReport& r);
std::string to_json(const std::vector<TruncationReport>& rs);
std::string to_json(const SchurIdentityReport& r);

/// Plot-ready rows "L,predicted,computed,abs_error", one per matched
/// outlier, with a header line.
std::string convergence_csv(const std::vector<TruncationReport>& rs);

/// Generic JSON -> CSV flattening: "path,value" rows, header included.
std::string flatten_csv(const std::string& json_text);

}  // namespace tailspec
