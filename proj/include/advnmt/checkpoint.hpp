#pragma once

#include <map>
#include <string>
#include <vector>

#include "advnmt/tensor.hpp"

namespace advnmt {

// Binary container for model parameters.
//
// Layout (all integers little-endian):
//   magic "NTC1"
//   u32 format version (currently 1)
//   u32 metadata pair count, then per pair: length-prefixed UTF-8 key, value
//   u32 entry count, then per entry:
//     u32 name length + UTF-8 name
//     u8 dtype tag (0 = f32)
//     u32 rank, u32 dims[rank]
//     f32 payload, little-endian, row-major
struct Checkpoint {
  std::uint32_t version = 1;
  std::map<std::string, std::string> meta;
  std::vector<std::pair<std::string, Tensor>> entries;

  void add(const std::string& name, const Tensor& t) { entries.emplace_back(name, t); }
  const Tensor* find(const std::string& name) const;
  // Looks up `name` and checks its shape; throws naming the entry otherwise.
  Tensor require(const std::string& name, const std::vector<int>& shape) const;

  void save(const std::string& path) const;
  static Checkpoint load(const std::string& path);

  // FNV-1a content hash over entry payloads; identifies a model in reports.
  std::string content_hash() const;
};

}  // namespace advnmt
