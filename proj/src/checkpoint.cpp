#include "advnmt/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace advnmt {

namespace {

void put_u32(std::ostream& os, std::uint32_t x) {
  unsigned char b[4] = {static_cast<unsigned char>(x), static_cast<unsigned char>(x >> 8),
                        static_cast<unsigned char>(x >> 16), static_cast<unsigned char>(x >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw std::runtime_error("checkpoint: truncated file");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_str(std::ostream& os, const std::string& s) {
  put_u32(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_str(std::istream& is) {
  const std::uint32_t n = get_u32(is);
  std::string s(n, '\0');
  is.read(s.data(), n);
  if (!is) throw std::runtime_error("checkpoint: truncated string");
  return s;
}

void put_f32(std::ostream& os, float f) {
  std::uint32_t x;
  std::memcpy(&x, &f, 4);
  put_u32(os, x);
}

float get_f32(std::istream& is) {
  const std::uint32_t x = get_u32(is);
  float f;
  std::memcpy(&f, &x, 4);
  return f;
}

}  // namespace

const Tensor* Checkpoint::find(const std::string& name) const {
  for (const auto& [n, t] : entries)
    if (n == name) return &t;
  return nullptr;
}

Tensor Checkpoint::require(const std::string& name, const std::vector<int>& shape) const {
  const Tensor* t = find(name);
  if (!t) throw std::runtime_error("checkpoint: missing entry '" + name + "'");
  if (t->shape() != shape)
    throw std::runtime_error("checkpoint: entry '" + name + "' has shape " + shape_str(t->shape()) +
                             ", expected " + shape_str(shape));
  return *t;
}

void Checkpoint::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("checkpoint: cannot open " + path + " for writing");
  os.write("NTC1", 4);
  put_u32(os, version);
  put_u32(os, static_cast<std::uint32_t>(meta.size()));
  for (const auto& [k, v] : meta) {
    put_str(os, k);
    put_str(os, v);
  }
  put_u32(os, static_cast<std::uint32_t>(entries.size()));
  for (const auto& [name, t] : entries) {
    put_str(os, name);
    os.put('\0');  // dtype tag 0 = f32
    put_u32(os, static_cast<std::uint32_t>(t.ndim()));
    for (int i = 0; i < t.ndim(); ++i) put_u32(os, static_cast<std::uint32_t>(t.dim(i)));
    for (std::size_t i = 0; i < t.numel(); ++i) put_f32(os, t.data()[i]);
  }
  if (!os) throw std::runtime_error("checkpoint: write failed for " + path);
}

Checkpoint Checkpoint::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("checkpoint: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "NTC1", 4) != 0)
    throw std::runtime_error("checkpoint: bad magic in " + path);
  Checkpoint ck;
  ck.version = get_u32(is);
  if (ck.version != 1)
    throw std::runtime_error("checkpoint: unsupported version " + std::to_string(ck.version) +
                             " in " + path);
  const std::uint32_t n_meta = get_u32(is);
  for (std::uint32_t i = 0; i < n_meta; ++i) {
    std::string k = get_str(is);
    ck.meta[k] = get_str(is);
  }
  const std::uint32_t n_entries = get_u32(is);
  for (std::uint32_t i = 0; i < n_entries; ++i) {
    std::string name = get_str(is);
    const int dtype = is.get();
    if (dtype != 0)
      throw std::runtime_error("checkpoint: entry '" + name + "' has unsupported dtype tag " +
                               std::to_string(dtype));
    const std::uint32_t rank = get_u32(is);
    std::vector<int> shape(rank);
    std::size_t numel = 1;
    for (auto& d : shape) {
      d = static_cast<int>(get_u32(is));
      numel *= static_cast<std::size_t>(d);
    }
    std::vector<float> data(numel);
    for (auto& f : data) f = get_f32(is);
    ck.entries.emplace_back(name, Tensor(shape, std::move(data)));
  }
  return ck;
}

std::string Checkpoint::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](const void* p, std::size_t n) {
    const unsigned char* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 0x100000001b3ull;
    }
  };
  for (const auto& [name, t] : entries) {
    mix(name.data(), name.size());
    mix(t.data().data(), t.numel() * sizeof(float));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace advnmt
