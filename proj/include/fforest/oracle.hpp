#pragma once

#include <string_view>

#include "fforest/forest.hpp"

namespace fforest {

struct OracleResult {
  int min_height = 0;
  FactTree witness;  // a valid tree achieving min_height
};

/// Exact minimum height over all valid factorization trees of w, found by
/// dynamic programming on word intervals. Intended for desk-scale cross
/// checks; throws WordTooLongError beyond the guard. Deterministic: ties
/// resolve to the first choice found (binary cuts left to right, then the
/// flat partition), so the witness is reproducible.
OracleResult min_height_forest(const Homomorphism& phi, std::string_view w,
                               std::size_t max_len_guard = 12);

}  // namespace fforest
