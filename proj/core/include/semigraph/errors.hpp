#pragma once

#include <stdexcept>
#include <string>

namespace semigraph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: unparseable JSON, wrong shapes, out-of-range table
// entries, unknown catalog names, unwritable output paths.
struct FormatError : Error {
  using Error::Error;
};

// A size cap was hit: materialization, graph vertex count, oracle
// vertex limit, enumeration order.
struct CapError : Error {
  using Error::Error;
};

// Input is well-formed but violates a hypothesis an operation needs
// (a factor fails an axiom, zero-divisors not closed under addition, ...).
struct HypothesisError : Error {
  using Error::Error;
};

// The case classifier has no applicable closed form for this product.
struct UnsupportedCaseError : Error {
  using Error::Error;
};

}  // namespace semigraph
