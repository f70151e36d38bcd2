#pragma once

#include <string>

#include "treepack/steiner.hpp"

namespace treepack {

// Normative JSON schema for connectivity certificates:
// {
//   "value": <int>,
//   "status": "exact" | "lower-bound-only",
//   "mode": "edge-disjoint" | "internally-disjoint",
//   "witness_terminals": [int...],
//   "trees": [ [[u,v], ...], ... ],
//   "upper_certificate": { "kind": "partition" | "counting" | "cut", ... }   (optional)
// }
// Keys are emitted sorted; identical results serialize to identical bytes.
std::string certificate_to_json(const ConnectivityResult& result);
ConnectivityResult certificate_from_json(const std::string& text);

struct CertificateCheck {
    bool ok = false;
    std::string message;
};

// Full re-verification against the graph: packing invariants, tree count
// equals the claimed value, and the upper certificate (when present) is
// arithmetically correct and matches the value for exact results.
CertificateCheck verify_certificate(const Graph& g, const ConnectivityResult& result);

}  // namespace treepack
