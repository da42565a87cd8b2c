#ifndef SPECISO_REPORT_HPP
#define SPECISO_REPORT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "speciso/bigmat.hpp"
#include "speciso/graph.hpp"

namespace speciso::report {

/// Unbounded integers always serialize as decimal strings; signature values
/// exceed 64-bit range from small n onward.
std::string decimal(const mpz_class& value);

/// Bit length of a nonnegative value (0 for 0).
unsigned long bit_length(const mpz_class& value);

std::string fnv1a64_hex(std::string_view bytes);

/// Content digest of a graph: FNV-1a over its canonical graph6 encoding,
/// so the digest is independent of which input format delivered the graph.
std::string graph_digest(const Graph& g);

/// JSON object {"order": n, "rows": [[decimal...], ...]} with stable key
/// order; row i lists ||B^k e_i||^2 for k = 1..n.
std::string signature_table_json(const SignatureTable& table);

} // namespace speciso::report

#endif
