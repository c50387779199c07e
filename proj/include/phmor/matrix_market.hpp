// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef PHMOR_MATRIX_MARKET_HPP
#define PHMOR_MATRIX_MARKET_HPP

#include <string>

#include "phmor/types.hpp"

namespace phmor
{

// Reads a real Matrix Market file (coordinate or array format; general,
// symmetric or skew-symmetric qualifiers). Throws IoError / InputError.
SparseMatrix ReadMatrixMarket(const std::string &path);

// Writes a sparse matrix in coordinate/general format with round-trip-exact
// (%.17g) entries. Explicit zeros are dropped.
void WriteMatrixMarket(const std::string &path, const SparseMatrix &mat);
void WriteMatrixMarket(const std::string &path, const Matrix &mat);

}  // namespace phmor

#endif  // PHMOR_MATRIX_MARKET_HPP
