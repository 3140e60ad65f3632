#pragma once

#include <string>
#include <vector>

#include "oumv/density.hpp"
#include "oumv/graph.hpp"

namespace oumv {

struct ExpansionCertificate {
  enum class Method { exact, spectral };
  Method method = Method::exact;
  double value = 0.0;            // lower bound on h (exact h in exact mode)
  Rational exact_value{0};       // exact mode only
  std::vector<NodeId> witness;   // exact mode only
  double lambda2 = 0.0;          // spectral mode only
  bool disconnected = false;
  std::string solver;            // "enumeration", "dense" or "power"
};

constexpr int kExhaustiveExpansionCap = 22;

// Exact edge expansion by Gray-code enumeration of all S with |S| <= N/2.
ExpansionCertificate edge_expansion_exact(const DynamicGraph& g, int cap = kExhaustiveExpansionCap);

// h >= lambda_2(L)/2. Dense symmetric eigensolver up to `dense_limit` nodes, deflated
// power iteration above it. The reported value is shaded down by the solver tolerance.
ExpansionCertificate expansion_lower_bound_spectral(const DynamicGraph& g, int dense_limit = 1500,
                                                    double rel_tol = 1e-6);

double laplacian_lambda2(const DynamicGraph& g, int dense_limit = 1500, double rel_tol = 1e-6,
                         std::string* solver = nullptr);

ExpansionCertificate certify_expansion(const DynamicGraph& g);

}  // namespace oumv
