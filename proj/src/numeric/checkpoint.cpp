#include "emovae/numeric/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "emovae/error.hpp"

namespace emovae {

namespace {

constexpr char kMagic[8] = {'E', 'M', 'O', 'V', 'A', 'E', '1', '\n'};

void put_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_u64_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

void put_f64_le(std::string& out, double d) {
  put_u64_le(out, std::bit_cast<std::uint64_t>(d));
}

double get_f64_le(const unsigned char* p) {
  return std::bit_cast<double>(get_u64_le(p));
}

}  // namespace

void Checkpoint::add(std::string name, Matrix m) {
  tensors.emplace_back(std::move(name), std::move(m));
}

bool Checkpoint::has(const std::string& name) const {
  for (const auto& [n, t] : tensors) {
    if (n == name) return true;
  }
  return false;
}

const Matrix& Checkpoint::tensor(const std::string& name) const {
  for (const auto& [n, t] : tensors) {
    if (n == name) return t;
  }
  throw IoError("checkpoint: no tensor named '" + name + "'");
}

void Checkpoint::save(const std::filesystem::path& path) const {
  nlohmann::json header;
  header["meta"] = meta;
  header["tensors"] = nlohmann::json::array();
  std::uint64_t offset = 0;
  for (const auto& [name, t] : tensors) {
    header["tensors"].push_back({{"name", name},
                                 {"rows", t.rows},
                                 {"cols", t.cols},
                                 {"offset", offset}});
    offset += static_cast<std::uint64_t>(t.size()) * 8;
  }
  const std::string header_bytes = header.dump();

  std::string out;
  out.reserve(16 + header_bytes.size() + offset);
  out.append(kMagic, sizeof(kMagic));
  put_u64_le(out, header_bytes.size());
  out.append(header_bytes);
  for (const auto& [name, t] : tensors) {
    for (double d : t.data) put_f64_le(out, d);
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("checkpoint: cannot open for writing: " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("checkpoint: write failed: " + path.string());
}

Checkpoint Checkpoint::load(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("checkpoint: cannot open: " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(f)),
                    std::istreambuf_iterator<char>());
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw FormatError("checkpoint: bad magic in " + path.string());
  }
  const auto* raw = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::uint64_t header_len = get_u64_le(raw + 8);
  if (16 + header_len > bytes.size()) {
    throw FormatError("checkpoint: truncated header in " + path.string());
  }
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(bytes.substr(16, header_len));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("checkpoint: malformed header: ") + e.what());
  }

  Checkpoint cp;
  for (auto& [k, v] : header.at("meta").items()) {
    cp.meta[k] = v.get<std::string>();
  }
  const std::size_t payload_start = 16 + header_len;
  for (const auto& entry : header.at("tensors")) {
    Matrix t(entry.at("rows").get<std::size_t>(),
             entry.at("cols").get<std::size_t>());
    const std::uint64_t offset = entry.at("offset").get<std::uint64_t>();
    const std::size_t begin = payload_start + offset;
    if (begin + t.size() * 8 > bytes.size()) {
      throw FormatError("checkpoint: tensor '" + entry.at("name").get<std::string>() +
                        "' overruns file " + path.string());
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      t.data[i] = get_f64_le(raw + begin + i * 8);
    }
    cp.add(entry.at("name").get<std::string>(), std::move(t));
  }
  return cp;
}

}  // namespace emovae
