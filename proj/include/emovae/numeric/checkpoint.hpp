#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "emovae/numeric/matrix.hpp"

namespace emovae {

// Tensor container file: 8 magic bytes "EMOVAE1\n", a little-endian uint64
// header length, a UTF-8 JSON header {"meta": {...}, "tensors": [{name, rows,
// cols, offset}, ...]}, then the payload of raw little-endian float64 values.
// Offsets are bytes from the payload start. Save/load round-trips bit-exactly.
struct Checkpoint {
  std::map<std::string, std::string> meta;
  std::vector<std::pair<std::string, Matrix>> tensors;  // ordered

  void add(std::string name, Matrix m);
  bool has(const std::string& name) const;
  const Matrix& tensor(const std::string& name) const;

  void save(const std::filesystem::path& path) const;
  static Checkpoint load(const std::filesystem::path& path);
};

}  // namespace emovae
