// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#include "phmor/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "phmor/errors.hpp"

namespace phmor
{

namespace
{

std::string Lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

SparseMatrix ReadMatrixMarket(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  }

  std::string header;
  if (!std::getline(in, header) || header.rfind("%%MatrixMarket", 0) != 0)
  {
    throw Error(ErrorCode::InputError, "'" + path + "' is not a Matrix Market file");
  }
  std::istringstream hs(header);
  std::string banner, object, format, field, symmetry;
  hs >> banner >> object >> format >> field >> symmetry;
  object = Lower(object);
  format = Lower(format);
  field = Lower(field);
  symmetry = Lower(symmetry);
  if (object != "matrix" || (field != "real" && field != "integer"))
  {
    throw Error(ErrorCode::InputError, "'" + path + "': unsupported Matrix Market type");
  }
  const bool coordinate = (format == "coordinate");
  if (!coordinate && format != "array")
  {
    throw Error(ErrorCode::InputError, "'" + path + "': unknown format '" + format + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric")
  {
    throw Error(ErrorCode::InputError, "'" + path + "': unsupported symmetry '" + symmetry + "'");
  }

  std::string line;
  auto next_data_line = [&](std::string &out) -> bool
  {
    while (std::getline(in, out))
    {
      if (!out.empty() && out[0] != '%')
      {
        return true;
      }
    }
    return false;
  };
  if (!next_data_line(line))
  {
    throw Error(ErrorCode::InputError, "'" + path + "': missing size line");
  }

  std::istringstream ss(line);
  Index rows = 0, cols = 0;
  ss >> rows >> cols;
  if (rows < 0 || cols < 0 || ss.fail())
  {
    throw Error(ErrorCode::InputError, "'" + path + "': bad size line");
  }

  std::vector<Eigen::Triplet<double>> triplets;
  if (coordinate)
  {
    long long nnz = 0;
    ss >> nnz;
    if (ss.fail() || nnz < 0)
    {
      throw Error(ErrorCode::InputError, "'" + path + "': bad nnz count");
    }
    triplets.reserve(static_cast<std::size_t>(2 * nnz));
    for (long long k = 0; k < nnz; k++)
    {
      if (!next_data_line(line))
      {
        throw Error(ErrorCode::InputError, "'" + path + "': truncated entry list");
      }
      std::istringstream es(line);
      Index i = 0, j = 0;
      double v = 0.0;
      es >> i >> j >> v;
      if (es.fail() || i < 1 || j < 1 || i > rows || j > cols)
      {
        throw Error(ErrorCode::InputError, "'" + path + "': bad coordinate entry");
      }
      triplets.emplace_back(i - 1, j - 1, v);
      if (i != j)
      {
        if (symmetry == "symmetric")
        {
          triplets.emplace_back(j - 1, i - 1, v);
        }
        else if (symmetry == "skew-symmetric")
        {
          triplets.emplace_back(j - 1, i - 1, -v);
        }
      }
    }
  }
  else
  {
    // Array format stores the full (or lower-triangular) matrix column-wise.
    for (Index j = 0; j < cols; j++)
    {
      const Index i0 = (symmetry == "general") ? 0 : (symmetry == "symmetric" ? j : j + 1);
      for (Index i = i0; i < rows; i++)
      {
        if (!next_data_line(line))
        {
          throw Error(ErrorCode::InputError, "'" + path + "': truncated array data");
        }
        double v = std::stod(line);
        if (v != 0.0)
        {
          triplets.emplace_back(i, j, v);
          if (i != j && symmetry == "symmetric")
          {
            triplets.emplace_back(j, i, v);
          }
          if (i != j && symmetry == "skew-symmetric")
          {
            triplets.emplace_back(j, i, -v);
          }
        }
      }
    }
  }

  SparseMatrix mat(rows, cols);
  mat.setFromTriplets(triplets.begin(), triplets.end());
  mat.makeCompressed();
  return mat;
}

void WriteMatrixMarket(const std::string &path, const SparseMatrix &mat)
{
  std::FILE *f = std::fopen(path.c_str(), "w");
  if (!f)
  {
    throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  }
  long long nnz = 0;
  for (Index k = 0; k < mat.outerSize(); k++)
  {
    for (SparseMatrix::InnerIterator it(mat, k); it; ++it)
    {
      if (it.value() != 0.0)
      {
        nnz++;
      }
    }
  }
  std::fprintf(f, "%%%%MatrixMarket matrix coordinate real general\n");
  std::fprintf(f, "%lld %lld %lld\n", static_cast<long long>(mat.rows()),
               static_cast<long long>(mat.cols()), nnz);
  for (Index k = 0; k < mat.outerSize(); k++)
  {
    for (SparseMatrix::InnerIterator it(mat, k); it; ++it)
    {
      if (it.value() != 0.0)
      {
        std::fprintf(f, "%lld %lld %.17g\n", static_cast<long long>(it.row() + 1),
                     static_cast<long long>(it.col() + 1), it.value());
      }
    }
  }
  if (std::fclose(f) != 0)
  {
    throw Error(ErrorCode::IoError, "error closing '" + path + "'");
  }
}

void WriteMatrixMarket(const std::string &path, const Matrix &mat)
{
  std::vector<Eigen::Triplet<double>> triplets;
  for (Index j = 0; j < mat.cols(); j++)
  {
    for (Index i = 0; i < mat.rows(); i++)
    {
      if (mat(i, j) != 0.0)
      {
        triplets.emplace_back(i, j, mat(i, j));
      }
    }
  }
  SparseMatrix sparse(mat.rows(), mat.cols());
  sparse.setFromTriplets(triplets.begin(), triplets.end());
  WriteMatrixMarket(path, sparse);
}

}  // namespace phmor
