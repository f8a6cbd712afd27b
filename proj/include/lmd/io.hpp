#ifndef LMD_IO_HPP
#define LMD_IO_HPP

#include <zlib.h>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "lmd/error.hpp"

namespace lmd {

// ---------------------------------------------------------------------------
// Hashing and seed derivation
// ---------------------------------------------------------------------------

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t fnv1a64(std::string_view s, uint64_t seed = 0xcbf29ce484222325ULL) {
  return fnv1a64(s.data(), s.size(), seed);
}

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-stage seed fan-out from the single --seed knob.
inline uint64_t derive_seed(uint64_t seed, std::string_view stage) {
  return splitmix64(seed ^ fnv1a64(stage));
}

inline uint64_t hash_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingArtifact("cannot open " + path.string());
  uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    h = fnv1a64(buf, static_cast<size_t>(in.gcount()), h);
    if (!in) break;
  }
  return h;
}

inline std::string hash_hex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Line reader over optionally gzip-compressed input
// ---------------------------------------------------------------------------

// Streams lines from a text file. zlib reads gzip members and plain bytes
// through the same handle, so .gz and uncompressed files both work.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path) : path_(path.string()) {
    file_ = gzopen(path_.c_str(), "rb");
    if (file_ == nullptr) throw MissingArtifact("cannot open " + path_);
    gzbuffer(file_, 1 << 20);
    buf_.resize(1 << 20);
  }

  ~LineReader() {
    if (file_ != nullptr) gzclose(file_);
  }

  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  // Fetches the next line without its terminator. Returns false at EOF.
  bool next(std::string& line) {
    line.clear();
    for (;;) {
      if (pos_ == end_) {
        if (!fill()) {
          if (line.empty() && !pending_) return false;
          pending_ = false;
          ++line_number_;
          return true;
        }
      }
      const char* start = buf_.data() + pos_;
      const char* nl = static_cast<const char*>(memchr(start, '\n', end_ - pos_));
      if (nl == nullptr) {
        line.append(start, end_ - pos_);
        pos_ = end_;
        pending_ = true;
        continue;
      }
      line.append(start, nl - start);
      pos_ += static_cast<size_t>(nl - start) + 1;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      pending_ = false;
      ++line_number_;
      return true;
    }
  }

  uint64_t line_number() const noexcept { return line_number_; }
  const std::string& path() const noexcept { return path_; }

 private:
  bool fill() {
    int n = gzread(file_, buf_.data(), static_cast<unsigned>(buf_.size()));
    if (n < 0) {
      int errnum = 0;
      const char* msg = gzerror(file_, &errnum);
      throw MalformedLine("read error in " + path_ + ": " + (msg ? msg : "?"));
    }
    pos_ = 0;
    end_ = static_cast<size_t>(n);
    return n > 0;
  }

  std::string path_;
  gzFile file_ = nullptr;
  std::vector<char> buf_;
  size_t pos_ = 0;
  size_t end_ = 0;
  bool pending_ = false;  // partial line carried across fills
  uint64_t line_number_ = 0;
};

// ---------------------------------------------------------------------------
// Buffered text writer with temp-then-rename commit
// ---------------------------------------------------------------------------

// Output goes to "<path>.tmp" and is renamed onto the final path by commit().
// A writer that is destroyed without commit() leaves no final artifact.
class FileWriter {
 public:
  explicit FileWriter(const std::filesystem::path& path)
      : final_path_(path), tmp_path_(path.string() + ".tmp") {
    out_.open(tmp_path_, std::ios::binary | std::ios::trunc);
    if (!out_) throw InternalError("cannot open for write: " + tmp_path_.string());
    buf_.reserve(1 << 20);
  }

  ~FileWriter() {
    if (!committed_) {
      out_.close();
      std::error_code ec;
      std::filesystem::remove(tmp_path_, ec);
    }
  }

  FileWriter(const FileWriter&) = delete;
  FileWriter& operator=(const FileWriter&) = delete;

  void write(std::string_view s) {
    buf_.append(s);
    if (buf_.size() >= (1 << 20)) flush();
  }

  void put(char c) {
    buf_.push_back(c);
    if (buf_.size() >= (1 << 20)) flush();
  }

  void write_u64(uint64_t v) { write_integral(v); }
  void write_i64(int64_t v) { write_integral(v); }
  void write_u32(uint32_t v) { write_integral(v); }

  // Shortest representation that parses back to the same double.
  void write_double(double v) {
    char tmp[64];
    auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof(tmp), v);
    (void)ec;
    write(std::string_view(tmp, static_cast<size_t>(ptr - tmp)));
  }

  void write_bytes(const void* data, size_t len) {
    buf_.append(static_cast<const char*>(data), len);
    if (buf_.size() >= (1 << 20)) flush();
  }

  void commit() {
    flush();
    out_.close();
    if (!out_) throw InternalError("write failed: " + tmp_path_.string());
    std::filesystem::rename(tmp_path_, final_path_);
    committed_ = true;
  }

 private:
  template <typename T>
  void write_integral(T v) {
    char tmp[32];
    auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof(tmp), v);
    (void)ec;
    write(std::string_view(tmp, static_cast<size_t>(ptr - tmp)));
  }

  void flush() {
    if (!buf_.empty()) {
      out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
      buf_.clear();
    }
  }

  std::filesystem::path final_path_;
  std::filesystem::path tmp_path_;
  std::ofstream out_;
  std::string buf_;
  bool committed_ = false;
};

inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  FileWriter w(path);
  w.write(content);
  w.commit();
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingArtifact("cannot open " + path.string());
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return s;
}

// ---------------------------------------------------------------------------
// Binary (de)serialization helpers, little-endian fixed-width
// ---------------------------------------------------------------------------

struct ByteWriter {
  std::string bytes;

  void u8(uint8_t v) { bytes.push_back(static_cast<char>(v)); }
  void u32(uint32_t v) { raw(&v, 4); }
  void u64(uint64_t v) { raw(&v, 8); }
  void i64(int64_t v) { raw(&v, 8); }
  void f64(double v) { raw(&v, 8); }
  void str(std::string_view s) {
    u32(static_cast<uint32_t>(s.size()));
    bytes.append(s.data(), s.size());
  }
  void raw(const void* p, size_t n) { bytes.append(static_cast<const char*>(p), n); }
};

// Bounds-checked reader; any overrun means the surrounding file is corrupt.
struct ByteReader {
  std::string_view bytes;
  size_t pos = 0;

  void need(size_t n) const {
    if (pos + n > bytes.size()) throw CorruptModel("truncated input");
  }
  uint8_t u8() {
    need(1);
    return static_cast<uint8_t>(bytes[pos++]);
  }
  uint32_t u32() {
    need(4);
    uint32_t v;
    memcpy(&v, bytes.data() + pos, 4);
    pos += 4;
    return v;
  }
  uint64_t u64() {
    need(8);
    uint64_t v;
    memcpy(&v, bytes.data() + pos, 8);
    pos += 8;
    return v;
  }
  int64_t i64() {
    need(8);
    int64_t v;
    memcpy(&v, bytes.data() + pos, 8);
    pos += 8;
    return v;
  }
  double f64() {
    need(8);
    double v;
    memcpy(&v, bytes.data() + pos, 8);
    pos += 8;
    return v;
  }
  std::string str() {
    uint32_t n = u32();
    need(n);
    std::string s(bytes.substr(pos, n));
    pos += n;
    return s;
  }
  bool done() const { return pos == bytes.size(); }
};

}  // namespace lmd

#endif  // LMD_IO_HPP
